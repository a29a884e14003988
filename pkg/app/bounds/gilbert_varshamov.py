"""
Gilbert-Varshamov-type existence bound for advance-sharing code chains.

A chain C_S ⊂ C_R ⊂ C_max with d_s(C_S^⊥s, C_R^⊥s) ≥ δ_q, d_s(C_R, C_S) ≥ δ_f
and d_s(C_max, C_S) ≥ δ_t exists whenever

    [(q^{n+k+s} − q^{n+s}) V(δ_q) + (q^n − q^{n−s}) V(δ_t)
        + (q^{n−s} − q^{n−k−s}) V(δ_f)] / (q^{2n} − 1) < 1,

with V(δ) the number of nonzero vectors of symplectic weight below δ.
Finite-length checks are exact rationals; the asymptotic rate conditions and
their root use floats.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

import numpy as np
from scipy.optimize import bisect

from app.algebra.finite_field import FieldSpec, field_from_order
from app.algebra.linalg import (
    Subspace,
    all_elements,
    enumerate_subspaces,
    membership,
)
from app.codes.symplectic import coset_distance, is_self_orthogonal, swt_rows, symplectic_dual
from app.core.errors import DomainError, EnumerationTooLarge
from app.core.logging_config import get_logger
from app.models.parameter_schemas import AsymptoticParams, GvParams
from app.models.report_schemas import (
    AsymptoticCodeParameters,
    AsymptoticReport,
    GvCheckReport,
    GvExistenceRecord,
    GvFrontierReport,
    RatioCheckReport,
)

logger = get_logger(__name__)

# exhaustive chain enumeration is limited to ambients F_q^{2n} with at most this many vectors
CHAIN_ENUMERATION_LIMIT = 64
ROOT_TOLERANCE = 1e-12


def weight_ball(q: int, n: int, delta: int) -> int:
    """Σ_{i=1}^{δ−1} C(n, i)(q² − 1)^i."""
    return sum(math.comb(n, i) * (q * q - 1) ** i for i in range(1, delta))


def count_low_weight(field: FieldSpec, n: int, delta: int) -> int:
    """Nonzero vectors of F_q^{2n} with symplectic weight at most δ − 1, by enumeration."""
    full = Subspace.full(field.gf, 2 * n, symplectic=True)
    weights = swt_rows(all_elements(full, skip_zero=True))
    return int(np.count_nonzero(weights <= delta - 1))


def _coefficients(q: int, n: int, k: int, s: int) -> tuple[int, int, int]:
    return (
        q ** (n + k + s) - q ** (n + s),
        q**n - q ** (n - s),
        q ** (n - s) - q ** (n - k - s),
    )


def gv_lhs(params: GvParams) -> Fraction:
    q, n = params.q, params.n
    quantum, advance, forbidden = _coefficients(q, n, params.k, params.s)
    numerator = (
        quantum * weight_ball(q, n, params.delta_q)
        + advance * weight_ball(q, n, params.delta_t)
        + forbidden * weight_ball(q, n, params.delta_f)
    )
    return Fraction(numerator, q ** (2 * n) - 1)


def gv_feasible(params: GvParams) -> bool:
    return gv_lhs(params) < 1


def gv_report(params: GvParams) -> GvCheckReport:
    value = gv_lhs(params)
    return GvCheckReport(
        **params.model_dump(),
        lhs=str(value),
        lhs_decimal=float(value),
        feasible=value < 1,
    )


def gv_search(q: int, n: int, k: int, s: int) -> GvFrontierReport:
    """
    Maximal feasible (δ_q, δ_f, δ_t) under the componentwise order, each δ in 1..n+1.

    For each (δ_q, δ_t) the largest feasible δ_f ≥ δ_t is found; the point is
    kept when raising δ_q or δ_t at that δ_f is infeasible. The left side is
    nondecreasing in every δ, so this is exactly the Pareto frontier.
    """
    GvParams(q=q, n=n, k=k, s=s, delta_q=1, delta_f=1, delta_t=1)
    top = n + 1
    balls = [0] + [weight_ball(q, n, d) for d in range(1, top + 1)]
    quantum, advance, forbidden = _coefficients(q, n, k, s)
    bound = q ** (2 * n) - 1

    def feasible(dq: int, df: int, dt: int) -> bool:
        return quantum * balls[dq] + advance * balls[dt] + forbidden * balls[df] < bound

    frontier: list[list[int]] = []
    for dq, dt in product(range(1, top + 1), repeat=2):
        best = next((df for df in range(top, dt - 1, -1) if feasible(dq, df, dt)), None)
        if best is None:
            continue
        if dq < top and feasible(dq + 1, best, dt):
            continue
        if dt < best and feasible(dq, best, dt + 1):
            continue
        frontier.append([dq, best, dt])
    logger.debug("GV frontier for (q, n, k, s) = (%d, %d, %d, %d): %d points", q, n, k, s, len(frontier))
    return GvFrontierReport(q=q, n=n, k=k, s=s, frontier=frontier)


def _check_chain_size(q: int, n: int) -> None:
    if q ** (2 * n) > CHAIN_ENUMERATION_LIMIT:
        raise EnumerationTooLarge(
            f"F_{q}^{2 * n} has {q ** (2 * n)} vectors; chain enumeration is limited to {CHAIN_ENUMERATION_LIMIT}"
        )


def lagrangians(field: FieldSpec, n: int) -> list[Subspace]:
    """Every C = C^⊥s of dimension n in F_q^{2n}."""
    full = Subspace.full(field.gf, 2 * n, symplectic=True)
    return [w for w in enumerate_subspaces(full, n) if is_self_orthogonal(w)]


def code_chains(field: FieldSpec, n: int, k: int, s: int) -> list[tuple[Subspace, Subspace, Subspace]]:
    """All (U, V, W) with U ⊂ V ⊂ W = W^⊥s, dim U = n − k − s and dim V = n − s."""
    chains = []
    for w in lagrangians(field, n):
        for v in enumerate_subspaces(w, n - s):
            for u in enumerate_subspaces(v, n - k - s):
                chains.append((u, v, w))
    return chains


def ratio_enumeration_check(q: int, n: int, k: int, s: int) -> RatioCheckReport:
    """
    Count chains with e ∈ U^⊥s \\ V^⊥s, e ∈ W \\ V and e ∈ V \\ U for every
    nonzero e and compare the fractions for the first nonzero e with the
    closed forms (q^{n+k+s} − q^{n+s}), (q^n − q^{n−s}), (q^{n−s} − q^{n−k−s})
    over q^{2n} − 1.
    """
    _check_chain_size(q, n)
    field = field_from_order(q)
    chains = code_chains(field, n, k, s)
    vectors = all_elements(Subspace.full(field.gf, 2 * n, symplectic=True), skip_zero=True)

    dual_counts = np.zeros(vectors.shape[0], dtype=np.int64)
    w_counts = np.zeros_like(dual_counts)
    v_counts = np.zeros_like(dual_counts)
    for u, v, w in chains:
        in_u, in_v = membership(u, vectors), membership(v, vectors)
        dual_counts += membership(symplectic_dual(u), vectors) & ~membership(symplectic_dual(v), vectors)
        w_counts += membership(w, vectors) & ~in_v
        v_counts += in_v & ~in_u

    total = len(chains)
    denominator = q ** (2 * n) - 1
    expected = [Fraction(c, denominator) for c in _coefficients(q, n, k, s)]
    observed = [Fraction(int(counts[0]), total) for counts in (dual_counts, w_counts, v_counts)]
    uniform = all(bool(np.all(counts == counts[0])) for counts in (dual_counts, w_counts, v_counts))
    logger.debug("ratio check over %d chains: observed %s", total, [str(r) for r in observed])
    return RatioCheckReport(
        q=q,
        n=n,
        k=k,
        s=s,
        total_chains=total,
        ratio_u_dual=str(observed[0]),
        ratio_w=str(observed[1]),
        ratio_v=str(observed[2]),
        expected_u_dual=str(expected[0]),
        expected_w=str(expected[1]),
        expected_v=str(expected[2]),
        matches=observed == expected,
        uniform_across_e=uniform,
    )


def gv_existence_check(q: int, n: int, k: int, s: int, max_delta: int = 3) -> list[GvExistenceRecord]:
    """
    For every δ in 1..max_delta (δ_f ≥ δ_t), report the bound and whether some
    chain reaches d_s(U^⊥s, V^⊥s) ≥ δ_q, d_s(V, U) ≥ δ_f and d_s(W, U) ≥ δ_t.
    """
    _check_chain_size(q, n)
    field = field_from_order(q)
    distances = []
    for u, v, w in code_chains(field, n, k, s):
        distances.append(
            (
                coset_distance(symplectic_dual(u), symplectic_dual(v)),
                coset_distance(v, u),
                coset_distance(w, u),
            )
        )

    records = []
    for dq, df, dt in product(range(1, max_delta + 1), repeat=3):
        if df < dt:
            continue
        params = GvParams(q=q, n=n, k=k, s=s, delta_q=dq, delta_f=df, delta_t=dt)
        found = any(a >= dq and b >= df and c >= dt for a, b, c in distances)
        records.append(GvExistenceRecord(deltas=[dq, df, dt], lhs=str(gv_lhs(params)), witness_found=found))
    return records


def h_q(q: int, x: float) -> float:
    """−x log_q x − (1 − x) log_q(1 − x) on the open interval (0, 1)."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"h_q is defined on (0, 1), got {x}")
    return -(x * math.log(x) + (1.0 - x) * math.log(1.0 - x)) / math.log(q)


def rate_term(q: int, eps: float) -> float:
    """h_q(ε) + ε log_q(q² − 1), extended by its limit 0 at ε = 0."""
    if eps == 0.0:
        return 0.0
    return h_q(q, eps) + eps * math.log(q * q - 1) / math.log(q)


def asymptotic_report(params: AsymptoticParams, find_root: bool = False) -> AsymptoticReport:
    q = params.q
    lhs_q, lhs_f, lhs_t = rate_term(q, params.eps_q), rate_term(q, params.eps_f), rate_term(q, params.eps_t)
    feasible = (
        lhs_q < 1.0 - params.secret_rate - params.randomness_rate
        and lhs_t < 1.0
        and lhs_f < 1.0 + params.randomness_rate
    )
    return AsymptoticReport(
        **params.model_dump(),
        lhs_q=lhs_q,
        lhs_f=lhs_f,
        lhs_t=lhs_t,
        feasible=feasible,
        root=epsilon_root(q) if find_root else None,
    )


def asymptotic_feasible(params: AsymptoticParams) -> bool:
    return asymptotic_report(params).feasible


def epsilon_root(q: int) -> float:
    """The ε in (0, 1/2) with h_q(ε) + ε log_q(q² − 1) = 1, by bisection."""
    if q < 2:
        raise DomainError(f"q = {q} must be at least 2")
    return float(bisect(lambda eps: rate_term(q, eps) - 1.0, 1e-15, 0.5, xtol=ROOT_TOLERANCE))


def asymptotic_parameters(params: AsymptoticParams, n: int) -> AsymptoticCodeParameters:
    """Dimensions and distances of the chain promised at length n by the rate conditions."""
    if n < 1:
        raise DomainError(f"length n = {n} must be positive")
    s = math.floor(n * params.randomness_rate)
    k = math.floor(n * (params.secret_rate + params.randomness_rate)) - s
    dim_c_s = n - k - s
    d_q = math.floor(n * params.eps_q)
    d_f = math.floor(n * params.eps_f)
    d_t = math.floor(n * params.eps_t)
    return AsymptoticCodeParameters(
        n=n,
        k=k,
        s=s,
        dim_c_s=dim_c_s,
        dim_c_r=n - s,
        distance_quantum=d_q,
        distance_forbidden=d_f,
        distance_advance=d_t,
        forbidden_shares=max(d_f - 1, 0),
        advance_shares=max(d_t - 1, 0),
    )
