"""
Classical linear secret sharing from a nested pair C2 ⊆ C1 ⊆ F_q^n, exact
joint distributions of (secret, shares), and the dealer-forgets experiment
in which the shares outside B are redrawn from the secret alone.

Probabilities are ``Fraction`` values. Information quantities are floats,
but every logarithm is taken of an exact ratio, so an exact independence
contributes log 1 = 0 with no rounding.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import galois
import numpy as np

from app.algebra.finite_field import FieldSpec, as_ints, field_new
from app.algebra.linalg import (
    Subspace,
    as_share_set,
    coefficient_vectors,
    complement,
    complete_basis,
    project,
    share_columns,
)
from app.codes.reed_solomon import rs_code
from app.core.errors import (
    AmbientMismatch,
    DimensionMismatch,
    EnumerationTooLarge,
    LengthMismatch,
    NotAdvanceShareable,
    NotASubspace,
    ParityViolation,
    VariableUnknown,
)
from app.core.logging_config import get_logger
from app.models.report_schemas import ClassicalSubsetRecord, DealerForgetsRecord, DealerForgetsReport

logger = get_logger(__name__)

CLASSICAL_ENUMERATION_LIMIT = 10**6
SECRET = "S"


@dataclass(frozen=True, eq=False)
class ClassicalScheme:
    """C2 ⊆ C1 ⊆ F_q^n with a transversal realizing g: F_q^k → C1/C2."""

    field: FieldSpec
    c1: Subspace
    c2: Subspace
    transversal: galois.FieldArray

    @property
    def n(self) -> int:
        return self.c1.ambient_dim

    @property
    def k(self) -> int:
        return self.c1.dim - self.c2.dim

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def gf(self) -> type[galois.FieldArray]:
        return self.field.gf

    def __repr__(self) -> str:
        return f"ClassicalScheme({self.field}, n={self.n}, k={self.k}, dim C2={self.c2.dim})"


def classical_scheme(field: FieldSpec, c1: Subspace, c2: Subspace) -> ClassicalScheme:
    """
    Validate the pair and fix g by pivot completion of C2 inside C1.

    Raises:
        AmbientMismatch: the codes are symplectic or over another field.
        NotASubspace: C2 ⊄ C1.
        DimensionMismatch: C1 = C2, so there is no secret.
    """
    for name, code in (("C1", c1), ("C2", c2)):
        if code.symplectic or code.gf is not field.gf:
            raise AmbientMismatch(f"{name} must be a plain subspace of {field}^n")
    if not c2.is_subspace_of(c1):
        raise NotASubspace("C2 ⊄ C1")
    if c1.dim == c2.dim:
        raise DimensionMismatch("C1 = C2 leaves no room for a secret")
    return ClassicalScheme(field=field, c1=c1, c2=c2, transversal=complete_basis(c2, c1))


def _vector(gf: type[galois.FieldArray], values, length: int, name: str) -> galois.FieldArray:
    vector = gf(as_ints(values if values is not None else [0] * length)).reshape(-1)
    if vector.size != length:
        raise LengthMismatch(f"{name} has length {vector.size}, expected {length}")
    return vector


def classical_encode(scheme: ClassicalScheme, secret: Sequence[int], randomness: Sequence[int] | None = None) -> galois.FieldArray:
    """c = Σ m_i t_i + Σ r_j c2_j, a point of the coset g(m); ``randomness`` has length dim C2."""
    m = _vector(scheme.gf, secret, scheme.k, "secret")
    shares = m @ scheme.transversal
    if scheme.c2.dim:
        if randomness is None:
            raise LengthMismatch(f"a coset choice of length {scheme.c2.dim} is required")
        r = _vector(scheme.gf, randomness, scheme.c2.dim, "coset choice")
        shares = shares + r @ scheme.c2.basis
    return shares


def forbidden_classical(scheme: ClassicalScheme, shares: Iterable[int]) -> bool:
    """A learns nothing iff P_A(C1) = P_A(C2)."""
    chosen = as_share_set(shares)
    return project(scheme.c1, chosen) == project(scheme.c2, chosen)


def _check_classical_size(scheme: ClassicalScheme) -> None:
    if scheme.q**scheme.c1.dim > CLASSICAL_ENUMERATION_LIMIT:
        raise EnumerationTooLarge(
            f"C1 has {scheme.q}^{scheme.c1.dim} codewords, above the classical limit {CLASSICAL_ENUMERATION_LIMIT}"
        )


def _row_set(rows: np.ndarray) -> set[tuple[int, ...]]:
    return set(map(tuple, rows.tolist()))


def advance_shareable_classical(scheme: ClassicalScheme, shares: Iterable[int]) -> bool:
    """
    Direct test: for every secret m and every y ∈ P_A(C1) some x ∈ g(m) has P_A(x) = y.

    Enumerates P_A(g(m)) for each of the q^k secrets; independent of
    :func:`forbidden_classical`.
    """
    _check_classical_size(scheme)
    columns = share_columns(as_share_set(shares), scheme.n, symplectic=False)
    gf, q = scheme.gf, scheme.q

    c1_words = as_ints(gf(coefficient_vectors(q, scheme.c1.dim)) @ scheme.c1.basis)
    target = _row_set(c1_words[:, columns])
    if scheme.c2.dim:
        c2_words = gf(coefficient_vectors(q, scheme.c2.dim)) @ scheme.c2.basis
    else:
        c2_words = gf.Zeros((1, scheme.n))

    for m in coefficient_vectors(q, scheme.k):
        coset = as_ints(c2_words + gf(m) @ scheme.transversal)
        if _row_set(coset[:, columns]) != target:
            logger.debug("secret %s cannot be matched on A = %s", m.tolist(), [c + 1 for c in columns])
            return False
    return True


def compare_subsets(scheme: ClassicalScheme) -> list[ClassicalSubsetRecord]:
    """Forbidden and advance-shareable verdicts side by side for all 2^n subsets."""
    records = []
    for size in range(scheme.n + 1):
        for subset in combinations(range(1, scheme.n + 1), size):
            forbidden = forbidden_classical(scheme, subset)
            shareable = advance_shareable_classical(scheme, subset)
            records.append(
                ClassicalSubsetRecord(subset=list(subset), forbidden=forbidden, advance_shareable=shareable, agree=forbidden == shareable)
            )
    return records


@dataclass(frozen=True)
class JointDistribution:
    """Exact probability table over named finite variables; outcomes are integer tuples."""

    variables: tuple[str, ...]
    table: Mapping[tuple[int, ...], Fraction] = dataclass_field(repr=False)

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise VariableUnknown(f"duplicate variable names in {self.variables}")
        if any(len(outcome) != len(self.variables) for outcome in self.table):
            raise LengthMismatch("outcome tuples must match the variable list")
        if any(p < 0 for p in self.table.values()):
            raise ValueError("probabilities must be nonnegative")
        if sum(self.table.values(), Fraction(0)) != 1:
            raise ValueError("probabilities must sum to exactly 1")

    def indices(self, names: Iterable[str]) -> tuple[int, ...]:
        positions = []
        for name in names:
            if name not in self.variables:
                raise VariableUnknown(f"unknown variable {name!r}; known: {', '.join(self.variables)}")
            positions.append(self.variables.index(name))
        return tuple(positions)

    def marginal(self, names: Iterable[str]) -> dict[tuple[int, ...], Fraction]:
        positions = self.indices(names)
        result: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
        for outcome, p in self.table.items():
            if p:
                result[tuple(outcome[i] for i in positions)] += p
        return dict(result)


def share_names(shares: Iterable[int]) -> list[str]:
    return [f"X{i}" for i in as_share_set(shares)]


def joint_distribution(scheme: ClassicalScheme) -> JointDistribution:
    """(S, X_1..X_n) for a uniform secret and a uniform coset choice; S is the secret's lexicographic index."""
    _check_classical_size(scheme)
    q = scheme.q
    generators = np.concatenate([scheme.transversal, scheme.c2.basis], axis=0)
    coefficients = coefficient_vectors(q, scheme.c1.dim)
    words = as_ints(scheme.gf(coefficients) @ generators)
    secret_index = coefficients[:, : scheme.k] @ (q ** np.arange(scheme.k - 1, -1, -1, dtype=np.int64))

    weight = Fraction(1, q**scheme.c1.dim)
    table: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for s, word in zip(secret_index.tolist(), words.tolist()):
        table[(s, *word)] += weight
    return JointDistribution(variables=(SECRET, *share_names(range(1, scheme.n + 1))), table=dict(table))


def _log(ratio: Fraction, base: float) -> float:
    if ratio == 1:
        return 0.0
    return (math.log2(ratio.numerator) - math.log2(ratio.denominator)) / math.log2(base)


def conditional_mutual_information(
    dist: JointDistribution,
    first: Sequence[str],
    second: Sequence[str],
    given: Sequence[str] = (),
    base: float = 2,
) -> float:
    """I(first; second | given) = Σ p(a,b,c) log p(a,b,c) p(c) / (p(a,c) p(b,c))."""
    first, second, given = list(first), list(second), list(given)
    joint = dist.marginal(first + second + given)
    with_first = dist.marginal(first + given)
    with_second = dist.marginal(second + given)
    cond = dist.marginal(given)
    na, nb = len(first), len(second)

    total = 0.0
    for outcome, p in joint.items():
        a, b, c = outcome[:na], outcome[na : na + nb], outcome[na + nb :]
        ratio = p * cond[c] / (with_first[a + c] * with_second[b + c])
        total += float(p) * _log(ratio, base)
    return max(total, 0.0)


def mutual_information(dist: JointDistribution, first: Sequence[str], second: Sequence[str], base: float = 2) -> float:
    """I(first; second) in log base ``base`` (bits by default)."""
    return conditional_mutual_information(dist, first, second, (), base)


def independent(dist: JointDistribution, first: Sequence[str], second: Sequence[str], given: Sequence[str] = ()) -> bool:
    """Exact test of first ⊥ second | given by cross-multiplication over the support."""
    first, second, given = list(first), list(second), list(given)
    joint = dist.marginal(first + second + given)
    with_first = dist.marginal(first + given)
    with_second = dist.marginal(second + given)
    cond = dist.marginal(given)
    na = len(first)

    by_condition_second: dict[tuple[int, ...], list[tuple[tuple[int, ...], Fraction]]] = defaultdict(list)
    for key, p in with_second.items():
        by_condition_second[key[len(second):]].append((key[: len(second)], p))

    for key, p_ac in with_first.items():
        a, c = key[:na], key[na:]
        for b, p_bc in by_condition_second.get(c, []):
            p_abc = joint.get(a + b + c, Fraction(0))
            if p_abc * cond[c] != p_ac * p_bc:
                return False
    return True


def _subsets(items: Sequence[int]) -> list[tuple[int, ...]]:
    return [subset for size in range(len(items) + 1) for subset in combinations(items, size)]


def dealer_forgets_distribution(dist: JointDistribution, advance_set: Sequence[int]) -> JointDistribution:
    """P'(s, x_B, x_B̄) = P(x_B) · P(s, x_B̄): the shares in B kept, the rest redrawn from S alone."""
    kept_names = share_names(advance_set)
    rest_names = [name for name in dist.variables if name != SECRET and name not in kept_names]
    kept = dist.marginal(kept_names)
    secret_and_rest = dist.marginal([SECRET, *rest_names])

    order = [SECRET, *kept_names, *rest_names]
    positions = [order.index(name) for name in dist.variables]
    table: dict[tuple[int, ...], Fraction] = {}
    for x_kept, p_kept in kept.items():
        for (s, *x_rest), p_rest in secret_and_rest.items():
            combined = (s, *x_kept, *x_rest)
            table[tuple(combined[i] for i in positions)] = p_kept * p_rest
    return JointDistribution(variables=dist.variables, table=table)


def dealer_forgets_experiment(scheme: ClassicalScheme, advance_set: Iterable[int], base: float = 2) -> DealerForgetsReport:
    """
    Check I(D ∪ E; S) = I(E; S) for all D ⊆ B and E ⊆ B̄ once the dealer forgets
    how the shares in B were drawn.

    Each record's deviation is I(D; S | E), equal to the difference by the
    chain rule; ``exact_equality`` is the integer independence certificate.

    Raises:
        NotAdvanceShareable: the shares in B carry information about S.
    """
    chosen = as_share_set(advance_set)
    rest = complement(chosen, scheme.n)
    original = joint_distribution(scheme)
    if not independent(original, [SECRET], share_names(chosen)):
        raise NotAdvanceShareable(f"shares {list(chosen)} are not independent of the secret")

    forgotten = dealer_forgets_distribution(original, chosen)
    records = []
    original_gain = 0.0
    for kept in _subsets(chosen):
        for others in _subsets(rest):
            d_names, e_names = share_names(kept), share_names(others)
            with_kept = mutual_information(forgotten, d_names + e_names, [SECRET], base)
            rest_only = mutual_information(forgotten, e_names, [SECRET], base)
            records.append(
                DealerForgetsRecord(
                    kept=list(kept),
                    rest=list(others),
                    info_with_kept=with_kept,
                    info_rest_only=rest_only,
                    deviation=conditional_mutual_information(forgotten, d_names, [SECRET], e_names, base),
                    conditionally_independent=independent(forgotten, d_names, [SECRET], e_names),
                )
            )
            original_gain = max(original_gain, conditional_mutual_information(original, d_names, [SECRET], e_names, base))

    logger.debug("dealer-forgets over B = %s: %d (D, E) pairs", chosen, len(records))
    return DealerForgetsReport(
        advance_set=list(chosen),
        records=records,
        max_deviation=max(abs(r.deviation) for r in records),
        exact_equality=all(r.conditionally_independent for r in records),
        original_max_gain=original_gain,
    )


def ramp_shamir_scheme(field: FieldSpec, n: int, k: int, s: int) -> ClassicalScheme:
    """
    Ramp Shamir with the qualified sets of the quantum RS scheme:
    C1 = RS(n, (n+k+s)/2), C2 = RS(n, (n+s−k)/2).
    """
    if k < 1 or s < 0 or n - k - s < 0:
        raise DimensionMismatch(f"(n, k, s) = ({n}, {k}, {s}) needs k ≥ 1, s ≥ 0, n − k − s ≥ 0")
    if (n + s - k) % 2:
        raise ParityViolation(f"n + s − k = {n + s - k} must be even")
    c1 = rs_code(field, n, (n + k + s) // 2)
    c2 = rs_code(field, n, (n + s - k) // 2)
    return classical_scheme(field, c1, c2)


def one_time_pad_scheme() -> ClassicalScheme:
    """Two shares over F_2: share 1 is the key r and share 2 is m + r."""
    field = field_new(2)
    c1 = Subspace.full(field.gf, 2)
    c2 = Subspace.span(field.gf, [[1, 1]])
    return classical_scheme(field, c1, c2)
