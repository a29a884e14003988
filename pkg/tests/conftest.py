import pytest

from app.algebra.finite_field import field_new
from app.codes.fixtures import bell_pair_triple, ternary_rs4_triple
from app.codes.reed_solomon import build_rs_scheme
from app.core.config import Config
from app.models.parameter_schemas import RsParams
from app.schemes.advance_sharing import build_scheme


@pytest.fixture
def gf2():
    return field_new(2)


@pytest.fixture
def gf3():
    return field_new(3)


@pytest.fixture
def gf4():
    return field_new(2, 2)


@pytest.fixture
def bell_triple():
    return bell_pair_triple()


@pytest.fixture
def ternary_triple():
    return ternary_rs4_triple()


@pytest.fixture
def bell_scheme(bell_triple):
    return build_scheme(bell_triple, (1,))


@pytest.fixture
def ternary_scheme(ternary_triple):
    return build_scheme(ternary_triple, (1, 2))


@pytest.fixture(scope="session")
def rs5_triple():
    """q = n = 5, k = 2, s = 1."""
    return build_rs_scheme(RsParams(q=5, k=2, s=1))


@pytest.fixture
def data_dir(tmp_path, monkeypatch):
    """Point report storage at a temporary directory."""
    monkeypatch.setattr(Config, "ADVSHARE_DATA_DIR", str(tmp_path / "data"))
    return tmp_path / "data"
