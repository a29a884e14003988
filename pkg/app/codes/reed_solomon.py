"""
Reed-Solomon construction of the scheme with n = q, its closed-form access
thresholds and the comparison against the matched ramp Shamir scheme.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from app.algebra.finite_field import FieldSpec, as_ints, field_from_order
from app.algebra.linalg import Subspace
from app.codes.symplectic import CodeTriple, css_subspace, validate_triple
from app.core.errors import DimensionMismatch, DuplicatePoints, ParityViolation
from app.core.logging_config import get_logger
from app.models.parameter_schemas import RsParams
from app.models.report_schemas import SchemeColumn, Table1Report, ThresholdRow

logger = get_logger(__name__)


def default_points(field: FieldSpec):
    """All of F_q in canonical integer order."""
    return field.gf(np.arange(field.q))


def rs_code(field: FieldSpec, n: int, k: int, points: Sequence[int] | None = None) -> Subspace:
    """RS(n, k): evaluations of every polynomial of degree < k at n distinct points."""
    pts = default_points(field)[:n] if points is None else field.gf(as_ints(points)).reshape(-1)
    if pts.size != n:
        raise DimensionMismatch(f"{pts.size} points given for length {n}")
    if len(set(as_ints(pts).tolist())) != n:
        raise DuplicatePoints(f"evaluation points {as_ints(pts).tolist()} are not distinct")
    if not 0 <= k <= n:
        raise DimensionMismatch(f"RS dimension {k} outside 0..{n}")
    if k == 0:
        return Subspace.zero(field.gf, n)
    rows = [field.gf.Ones(n)] + [pts**j for j in range(1, k)]
    return Subspace.span(field.gf, np.stack(rows), ambient_dim=n)


def _halves(total: int, relax: bool) -> tuple[int, int]:
    if total % 2 and not relax:
        raise ParityViolation(f"{total} is odd")
    return total // 2, total - total // 2


def build_rs_scheme(params: RsParams, field: FieldSpec | None = None) -> CodeTriple:
    """
    C_S, C_R from RS(n,(n−k−s)/2) and RS(n,(n−s)/2) on both halves, and
    C_max = RS(n,⌊n/2⌋) × RS(n,⌈n/2⌉).

    With ``relax_parity`` an odd dimension is split as ⌊·⌋ on the X half and
    ⌈·⌉ on the Z half; the chain is validated either way.
    """
    field = field or field_from_order(params.q)
    n, k, s = params.n, params.k, params.s
    relax = params.relax_parity

    def rs_pair(total: int) -> Subspace:
        low, high = _halves(total, relax)
        return css_subspace(rs_code(field, n, low, params.points), rs_code(field, n, high, params.points))

    c_s = rs_pair(n - k - s)
    c_r = rs_pair(n - s)
    c_max = css_subspace(rs_code(field, n, n // 2, params.points), rs_code(field, n, n - n // 2, params.points))
    logger.debug("RS scheme q=%d k=%d s=%d: dims (%d, %d, %d)", params.q, k, s, c_s.dim, c_r.dim, c_max.dim)
    return validate_triple(field, c_s, c_r, c_max, n, k, s)


def _check_parameters(n: int, k: int, s: int) -> None:
    if k < 1 or s < 0 or n - k - s < 0:
        raise DimensionMismatch(f"(n, k, s) = ({n}, {k}, {s}) needs k ≥ 1, s ≥ 0, n − k − s ≥ 0")
    if k % 2 or (n - s) % 2:
        raise ParityViolation(f"k = {k} and n − s = {n - s} must both be even")


def rs_thresholds(n: int, k: int, s: int) -> ThresholdRow:
    """Forbidden iff |A| ≤ (n+s)/2, qualified iff |A| ≥ (n+k+s)/2, advance-shareable iff |A| ≤ ⌊n/2⌋."""
    _check_parameters(n, k, s)
    return ThresholdRow(
        forbidden_max=(n + s) // 2,
        qualified_min=(n + k + s) // 2,
        advance_max=n // 2,
    )


def shamir_thresholds(n: int, k: int, s: int) -> ThresholdRow:
    """Ramp Shamir with the same qualified sets: forbidden and advance-shareable iff |A| ≤ (n+s−k)/2."""
    _check_parameters(n, k, s)
    return ThresholdRow(
        forbidden_max=(n + s - k) // 2,
        qualified_min=(n + k + s) // 2,
        advance_max=(n + s - k) // 2,
    )


def table1(n: int, k: int, s: int) -> Table1Report:
    """Quantum RS scheme versus ramp Shamir, symbolically and numerically (q = n)."""
    quantum_row = rs_thresholds(n, k, s)
    classical_row = shamir_thresholds(n, k, s)
    share_log2 = math.log2(n)
    secret_bits = k * share_log2
    qualified = "(n+k+s)/2 ≤ |A| ≤ n"
    quantum = SchemeColumn(
        secret_size="k·log2 q bit",
        share_size="log2 q qubit",
        qualified_sets=qualified,
        forbidden_sets="0 ≤ |A| ≤ (n+s)/2",
        advance_shareable_sets="0 ≤ |A| ≤ ⌊n/2⌋",
        secret_bits=secret_bits,
        share_size_log2=share_log2,
        thresholds=quantum_row,
    )
    classical = SchemeColumn(
        secret_size="k·log2 q bit",
        share_size="log2 q bit",
        qualified_sets=qualified,
        forbidden_sets="0 ≤ |A| ≤ (n+s−k)/2",
        advance_shareable_sets="0 ≤ |A| ≤ (n+s−k)/2",
        secret_bits=secret_bits,
        share_size_log2=share_log2,
        thresholds=classical_row,
    )
    return Table1Report(q=n, n=n, k=k, s=s, quantum=quantum, classical=classical, advantage=quantum_row.advance_max > classical_row.advance_max)
