from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class RsParams(BaseModel):
    """Reed-Solomon family parameters; the length n always equals q."""

    q: int = Field(ge=2)
    k: int = Field(ge=1)
    s: int = Field(ge=0)
    points: Optional[List[int]] = None
    relax_parity: bool = False

    @property
    def n(self) -> int:
        return self.q

    @model_validator(mode="after")
    def check_dimensions(self) -> "RsParams":
        if self.n - self.k - self.s < 0:
            raise ValueError(f"n − k − s = {self.n - self.k - self.s} is negative")
        if not self.relax_parity and (self.k % 2 or (self.n - self.s) % 2):
            raise ValueError(f"k = {self.k} and n − s = {self.n - self.s} must both be even")
        if self.points is not None and len(self.points) != self.n:
            raise ValueError(f"{len(self.points)} evaluation points given, expected n = {self.n}")
        return self


class GvParams(BaseModel):
    q: int = Field(ge=2)
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    s: int = Field(ge=0)
    delta_q: int = Field(ge=1)
    delta_f: int = Field(ge=1)
    delta_t: int = Field(ge=1)

    @model_validator(mode="after")
    def check_ranges(self) -> "GvParams":
        if self.n - self.k - self.s < 0:
            raise ValueError(f"n − k − s = {self.n - self.k - self.s} is negative")
        if self.delta_f < self.delta_t:
            raise ValueError(f"δ_f = {self.delta_f} must be at least δ_t = {self.delta_t}")
        for name in ("delta_q", "delta_f", "delta_t"):
            if getattr(self, name) > self.n + 1:
                raise ValueError(f"{name} = {getattr(self, name)} exceeds n + 1 = {self.n + 1}")
        return self


class AsymptoticParams(BaseModel):
    q: int = Field(ge=2)
    secret_rate: float = Field(ge=0.0, le=1.0)
    randomness_rate: float = Field(ge=0.0, le=1.0)
    eps_q: float = Field(default=0.0, ge=0.0, lt=0.5)
    eps_f: float = Field(default=0.0, ge=0.0, lt=0.5)
    eps_t: float = Field(default=0.0, ge=0.0, lt=0.5)

    @model_validator(mode="after")
    def check_order(self) -> "AsymptoticParams":
        if self.eps_t > self.eps_f:
            raise ValueError(f"ε_t = {self.eps_t} must not exceed ε_f = {self.eps_f}")
        return self
