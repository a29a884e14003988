import os
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _optional_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        return None


class Config:
    """
    Configuration class for the advance-sharing toolkit.

    This class loads configuration settings from environment variables,
    typically defined in a .env file at the root of the project. Nothing here
    is required: every key has a default, and seeds are never configured
    through the environment.

    Usage:
    1. Optionally create a .env file to override guards or the log level.
       Example .env content:
       LOGGING_LEVEL="INFO"
       ADVSHARE_MAX_DIM="24"
       ADVSHARE_DATA_DIR="data"

    2. Import the global `config` instance from this module:
       `from app.core.config import config`

    3. Access configuration values as attributes:
       `cap = config.ADVSHARE_MAX_AMPLITUDES`

    4. To validate the raw environment at startup:
       `Config.validate_config()`
       This will raise a ValueError naming every malformed key.

    5. To get the enumeration and size guards as a dictionary:
       `limits = Config.get_limits()`
    """

    # Logging
    LOGGING_LEVEL: str = os.getenv("LOGGING_LEVEL", "WARNING")

    # Enumeration guard: largest enumerated space is 2**max_dim vectors
    DEFAULT_MAX_DIM: int = 20
    ADVSHARE_MAX_DIM: Optional[int] = _optional_int("ADVSHARE_MAX_DIM")

    # Size caps
    ADVSHARE_MAX_FIELD_ORDER: int = _optional_int("ADVSHARE_MAX_FIELD_ORDER") or 2**16
    ADVSHARE_MAX_AMPLITUDES: int = _optional_int("ADVSHARE_MAX_AMPLITUDES") or 2**16

    # Report storage
    ADVSHARE_DATA_DIR: str = os.getenv("ADVSHARE_DATA_DIR", "data")

    _INTEGER_KEYS = ["ADVSHARE_MAX_DIM", "ADVSHARE_MAX_FIELD_ORDER", "ADVSHARE_MAX_AMPLITUDES"]

    def __init__(self):
        self.validate_config()

    @classmethod
    def validate_config(cls) -> bool:
        """Validate that every integer key in the environment parses as a positive integer."""
        malformed_keys = []

        for key in cls._INTEGER_KEYS:
            raw = os.getenv(key)
            if raw is None or raw.strip() == "":
                continue
            try:
                if int(raw) <= 0:
                    malformed_keys.append(key)
            except ValueError:
                malformed_keys.append(key)

        if malformed_keys:
            raise ValueError(f"Malformed environment variables (expected positive integers): {', '.join(malformed_keys)}")

        return True

    @classmethod
    def enumeration_bits(cls) -> int:
        """Effective enumeration guard in bits (log2 of the largest enumerated space)."""
        return cls.ADVSHARE_MAX_DIM if cls.ADVSHARE_MAX_DIM is not None else cls.DEFAULT_MAX_DIM

    @classmethod
    def get_limits(cls) -> dict:
        """Get all guard settings as a dictionary."""
        return {
            "enumeration_bits": cls.enumeration_bits(),
            "max_field_order": cls.ADVSHARE_MAX_FIELD_ORDER,
            "max_amplitudes": cls.ADVSHARE_MAX_AMPLITUDES,
            "data_dir": cls.ADVSHARE_DATA_DIR,
            "logging_level": cls.LOGGING_LEVEL,
        }


# Create a global config instance
config = Config()
