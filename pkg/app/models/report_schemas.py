from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

REPORT_SCHEMA_VERSION = "1.0"


class Report(BaseModel):
    """Envelope of every CLI result; serialized with model_dump_json(indent=2)."""

    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any]
    version: str = REPORT_SCHEMA_VERSION
    seed: Optional[int] = None


# Access structure and advance sharing

class AccessRecord(BaseModel):
    subset: List[int]
    leakage_dim: int
    access_class: str
    advance_shareable: bool
    sufficient_bound_holds: Optional[bool] = None


class AdvanceRepRecord(BaseModel):
    secret: List[int]
    randomness: List[int]
    label: List[int]
    representative: Optional[List[int]] = None
    error: Optional[str] = None


# Reed-Solomon family and the quantum versus classical comparison

class ThresholdRow(BaseModel):
    forbidden_max: int
    qualified_min: int
    advance_max: int


class SchemeColumn(BaseModel):
    secret_size: str
    share_size: str
    qualified_sets: str
    forbidden_sets: str
    advance_shareable_sets: str
    secret_bits: float
    share_size_log2: float
    thresholds: ThresholdRow


class Table1Report(BaseModel):
    q: int
    n: int
    k: int
    s: int
    quantum: SchemeColumn
    classical: SchemeColumn
    advantage: bool = Field(description="the quantum scheme has strictly larger advance-shareable sets")


# Classical comparison

class ClassicalSubsetRecord(BaseModel):
    subset: List[int]
    forbidden: bool
    advance_shareable: bool
    agree: bool


class DealerForgetsRecord(BaseModel):
    kept: List[int] = Field(description="D ⊆ B")
    rest: List[int] = Field(description="E ⊆ B̄")
    info_with_kept: float
    info_rest_only: float
    deviation: float
    conditionally_independent: bool


class DealerForgetsReport(BaseModel):
    advance_set: List[int]
    records: List[DealerForgetsRecord]
    max_deviation: float
    exact_equality: bool
    original_max_gain: float = Field(description="largest I(D∪E;S) − I(E;S) when the dealer keeps B")


class ClassicalComparisonReport(BaseModel):
    q: int
    n: int
    k: int
    subsets: List[ClassicalSubsetRecord]
    all_agree: bool
    dealer_forgets: Optional[DealerForgetsReport] = None


# Gilbert-Varshamov bound

class GvCheckReport(BaseModel):
    q: int
    n: int
    k: int
    s: int
    delta_q: int
    delta_f: int
    delta_t: int
    lhs: str
    lhs_decimal: float
    feasible: bool


class GvFrontierReport(BaseModel):
    q: int
    n: int
    k: int
    s: int
    frontier: List[List[int]]


class RatioCheckReport(BaseModel):
    q: int
    n: int
    k: int
    s: int
    total_chains: int
    ratio_u_dual: str
    ratio_w: str
    ratio_v: str
    expected_u_dual: str
    expected_w: str
    expected_v: str
    matches: bool
    uniform_across_e: bool


class GvExistenceRecord(BaseModel):
    deltas: List[int]
    lhs: str
    witness_found: bool


class AsymptoticReport(BaseModel):
    q: int
    secret_rate: float
    randomness_rate: float
    eps_q: float
    eps_f: float
    eps_t: float
    lhs_q: float
    lhs_f: float
    lhs_t: float
    feasible: bool
    root: Optional[float] = None


# Simulator certification

class SubsetCertification(BaseModel):
    subset: List[int]
    leakage_dim: int
    access_class: str
    holevo: float
    holevo_matches: bool
    secrecy: float
    distinguishability: float
    passed: bool


class ProtocolCertification(BaseModel):
    q: int
    n: int
    k: int
    s: int
    advance_set: List[int]
    advance_shareable: bool
    advance_invariance: float
    tolerance: float
    subsets: List[SubsetCertification]
    all_passed: bool


class AsymptoticCodeParameters(BaseModel):
    n: int
    k: int
    s: int
    dim_c_s: int
    dim_c_r: int
    distance_quantum: int
    distance_forbidden: int
    distance_advance: int
    forbidden_shares: int = Field(description="⌊nε_f⌋ − 1 shares are forbidden")
    advance_shares: int = Field(description="⌊nε_t⌋ − 1 shares are advance-shareable")
