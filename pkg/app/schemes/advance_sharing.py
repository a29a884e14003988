"""
The stabilizer secret-sharing scheme: the secret map f, conventional and
advance encodings, the advance-representative solver through the parity matrix H, and the
access-structure and advance-shareability classifiers.

A secret m ∈ F_q^k and a coset choice r ∈ F_q^s select the label
Σ m_i g_i + Σ r_j h_j; the quantum codeword is X(a)Z(b)|φ⟩ for that label,
and depends only on the label modulo C_max. Share subsets are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import galois
import numpy as np

from app.algebra.finite_field import as_ints
from app.algebra.linalg import (
    Subspace,
    as_share_set,
    check_enumerable,
    coefficient_vectors,
    complement,
    complete_basis,
    membership,
    project,
    restrict_support,
    share_columns,
    solve,
    subspace_sum,
)
from app.codes.symplectic import CodeTriple, coset_distance, symplectic_conjugate
from app.core.errors import (
    EmptyDifference,
    EnumerationTooLarge,
    LengthMismatch,
    NoAdvanceRepresentative,
    NoSolution,
    NotASubspace,
)
from app.core.logging_config import get_logger
from app.models.report_schemas import AccessRecord, AdvanceRepRecord

logger = get_logger(__name__)


class AccessClass(str, Enum):
    FORBIDDEN = "forbidden"
    INTERMEDIATE = "intermediate"
    QUALIFIED = "qualified"


@dataclass(frozen=True)
class Classification:
    access: AccessClass
    leakage: int


@dataclass(frozen=True, eq=False)
class Scheme:
    """A CodeTriple with a fixed advance set B, secret map f, randomness transversal and H."""

    triple: CodeTriple
    advance_set: tuple[int, ...]
    secret_transversal: galois.FieldArray
    randomness_transversal: galois.FieldArray
    parity: galois.FieldArray

    @property
    def rest(self) -> tuple[int, ...]:
        """B̄, the shares distributed once the secret is known."""
        return complement(self.advance_set, self.triple.n)

    @property
    def n(self) -> int:
        return self.triple.n

    @property
    def k(self) -> int:
        return self.triple.k

    @property
    def s(self) -> int:
        return self.triple.s

    @property
    def gf(self) -> type[galois.FieldArray]:
        return self.triple.field.gf


@dataclass(frozen=True, eq=False)
class EncodingLabel:
    """A representative (a|b) of the coset T chosen for secret m and coset choice r."""

    vector: galois.FieldArray
    secret: galois.FieldArray
    randomness: galois.FieldArray


def parity_matrix(c_max_rows: galois.FieldArray) -> galois.FieldArray:
    """H with row i = (d_i | −c_i) for the basis rows (c_i | d_i) of C_max, in the given order."""
    return symplectic_conjugate(c_max_rows)


def _share_set(advance_set: Iterable[int] | int | None, n: int) -> tuple[int, ...]:
    if advance_set is None:
        return ()
    if isinstance(advance_set, (int, np.integer)):
        advance_set = range(1, int(advance_set) + 1)
    chosen = as_share_set(advance_set)
    share_columns(chosen, n, symplectic=False)
    return chosen


def build_scheme(triple: CodeTriple, advance_set: Iterable[int] | int | None = None) -> Scheme:
    """
    Fix f, the randomness transversal and H for a validated triple.

    ``advance_set`` is a collection of 1-based shares, or an integer t for the
    prefix {1..t}. Transversals come from pivot completion of RREF bases:
    g_1..g_k complete C_R^⊥s inside C_S^⊥s and h_1..h_s complete C_max inside C_R^⊥s.
    """
    chosen = _share_set(advance_set, triple.n)
    secret_transversal = complete_basis(triple.dual_r, triple.dual_s)
    randomness_transversal = complete_basis(triple.c_max, triple.dual_r)
    scheme = Scheme(
        triple=triple,
        advance_set=chosen,
        secret_transversal=secret_transversal,
        randomness_transversal=randomness_transversal,
        parity=parity_matrix(triple.c_max.basis),
    )
    logger.debug("Built scheme for %r with B = %s", triple, chosen)
    return scheme


def _vector_of_length(gf: type[galois.FieldArray], values, length: int, name: str) -> galois.FieldArray:
    if values is None:
        values = [0] * length
    vector = gf(as_ints(values)).reshape(-1)
    if vector.size != length:
        raise LengthMismatch(f"{name} has length {vector.size}, expected {length}")
    return vector


def encode_label(scheme: Scheme, secret: Sequence[int], randomness: Sequence[int] | None = None) -> EncodingLabel:
    """
    Conventional encoding label Σ m_i g_i + Σ r_j h_j.

    ``randomness`` may be omitted only when s = 0.
    """
    gf = scheme.gf
    m = _vector_of_length(gf, secret, scheme.k, "secret")
    if randomness is None and scheme.s > 0:
        raise LengthMismatch(f"a coset choice of length {scheme.s} is required")
    r = _vector_of_length(gf, randomness, scheme.s, "coset choice")
    vector = m @ scheme.secret_transversal
    if scheme.s:
        vector = vector + r @ scheme.randomness_transversal
    return EncodingLabel(vector=vector, secret=m, randomness=r)


def random_coset_choice(scheme: Scheme, seed: int) -> galois.FieldArray:
    """s independent uniform field elements from an explicitly seeded generator."""
    rng = np.random.default_rng(seed)
    return scheme.gf(rng.integers(0, scheme.triple.q, size=scheme.s))


def decode_label(scheme: Scheme, vector) -> EncodingLabel:
    """Recover (m, r) from any vector of C_S^⊥s by writing it in the basis g, h, C_max."""
    gf = scheme.gf
    label = _vector_of_length(gf, vector, 2 * scheme.n, "label")
    generators = np.concatenate(
        [scheme.secret_transversal, scheme.randomness_transversal, scheme.triple.c_max.basis], axis=0
    )
    try:
        coordinates = solve(generators.T, label).particular
    except NoSolution as exc:
        raise NotASubspace("label is not in C_S^⊥s") from exc
    k, s = scheme.k, scheme.s
    return EncodingLabel(vector=label, secret=coordinates[:k], randomness=coordinates[k : k + s])


def advance_rep(scheme: Scheme, label: EncodingLabel | Sequence[int] | galois.FieldArray) -> galois.FieldArray:
    """
    Find (0,x|0,y) supported on B̄ in the same C_max-coset as the label.

    The unknowns are the B̄ columns of both halves. The particular solution
    (free variables zero) is returned; it is unique up to C_max ∩ F_q^{B̄}.

    Raises:
        NoAdvanceRepresentative: this coset has no representative supported on B̄.
    """
    vector = label.vector if isinstance(label, EncodingLabel) else scheme.gf(as_ints(label)).reshape(-1)
    if vector.size != 2 * scheme.n:
        raise LengthMismatch(f"label has length {vector.size}, expected {2 * scheme.n}")
    if not scheme.triple.dual_s.contains(vector):
        raise NotASubspace("label is not in C_S^⊥s")

    columns = share_columns(scheme.rest, scheme.n, symplectic=True)
    syndrome = scheme.parity @ vector
    try:
        solution = solve(scheme.parity[:, columns], syndrome)
    except NoSolution as exc:
        raise NoAdvanceRepresentative(
            f"no representative supported on B̄ = {scheme.rest} for this coset"
        ) from exc

    representative = scheme.gf.Zeros(2 * scheme.n)
    if columns:
        representative[columns] = solution.particular
    return representative


def advance_rep_records(
    scheme: Scheme,
    pairs: Iterable[tuple[Sequence[int], Sequence[int]]] | None = None,
) -> list[AdvanceRepRecord]:
    """
    Labels and B̄-supported representatives for the given (m, r) pairs, all
    q^{k+s} of them by default. A coset without a representative is recorded
    with its error instead of raising.
    """
    if pairs is None:
        check_enumerable(scheme.triple.q, scheme.k + scheme.s, "secret and coset choices")
        q = scheme.triple.q
        pairs = [(m, r) for m in coefficient_vectors(q, scheme.k) for r in coefficient_vectors(q, scheme.s)]

    records = []
    for secret, randomness in pairs:
        label = encode_label(scheme, secret, randomness)
        record = AdvanceRepRecord(
            secret=as_ints(label.secret).tolist(),
            randomness=as_ints(label.randomness).tolist(),
            label=as_ints(label.vector).tolist(),
        )
        try:
            record.representative = as_ints(advance_rep(scheme, label)).tolist()
        except NoAdvanceRepresentative as exc:
            record.error = f"{exc.code}: {exc}"
        records.append(record)
    return records


def leakage_dim(triple: CodeTriple, shares: Iterable[int]) -> int:
    """ℓ(A) = dim (C_R ∩ F_q^A) / (C_S ∩ F_q^A)."""
    chosen = as_share_set(shares)
    return restrict_support(triple.c_r, chosen).dim - restrict_support(triple.c_s, chosen).dim


def classify(triple: CodeTriple, shares: Iterable[int]) -> Classification:
    leakage = leakage_dim(triple, shares)
    if leakage == 0:
        access = AccessClass.FORBIDDEN
    elif leakage == triple.k:
        access = AccessClass.QUALIFIED
    else:
        access = AccessClass.INTERMEDIATE
    return Classification(access=access, leakage=leakage)


def is_advance_shareable(triple: CodeTriple, advance_set: Iterable[int]) -> bool:
    """dim (C_S^⊥s ∩ F_q^{B̄}) / (C_max ∩ F_q^{B̄}) equals dim C_S^⊥s / C_max = k + s."""
    rest = complement(advance_set, triple.n)
    lhs = restrict_support(triple.dual_s, rest).dim - restrict_support(triple.c_max, rest).dim
    return lhs == triple.k + triple.s


@lru_cache(maxsize=128)
def shared_coset_distance(triple: CodeTriple) -> int:
    """d_s(C_max, C_S), cached per triple."""
    return coset_distance(triple.c_max, triple.c_s)


def advance_sufficient(triple: CodeTriple, advance_set: Iterable[int]) -> bool:
    """|B| ≤ d_s(C_max, C_S) − 1, which implies advance-shareability without dimension counting."""
    return len(as_share_set(advance_set)) <= shared_coset_distance(triple) - 1


@dataclass(frozen=True)
class AdvanceDiagnostics:
    advance_set: tuple[int, ...]
    rest: tuple[int, ...]
    dim_dual_s_on_rest: int
    dim_c_max_on_rest: int
    required: int
    advance_shareable: bool
    sum_condition: bool
    isomorphism_lhs: int
    isomorphism_rhs: int
    shortening_lhs: int
    shortening_rhs: int


def advance_diagnostics(scheme: Scheme) -> AdvanceDiagnostics:
    """Every dimension entering the advance-shareability conditions for the scheme's B."""
    triple = scheme.triple
    rest = scheme.rest
    dual_s_rest = restrict_support(triple.dual_s, rest)
    dual_r_rest = restrict_support(triple.dual_r, rest)
    c_max_rest = restrict_support(triple.c_max, rest)
    with_max_s = subspace_sum(dual_s_rest, triple.c_max)
    with_max_r = subspace_sum(dual_r_rest, triple.c_max)
    return AdvanceDiagnostics(
        advance_set=scheme.advance_set,
        rest=rest,
        dim_dual_s_on_rest=dual_s_rest.dim,
        dim_c_max_on_rest=c_max_rest.dim,
        required=triple.k + triple.s,
        advance_shareable=dual_s_rest.dim - c_max_rest.dim == triple.k + triple.s,
        sum_condition=with_max_s == triple.dual_s,
        isomorphism_lhs=dual_s_rest.dim - dual_r_rest.dim,
        isomorphism_rhs=with_max_s.dim - with_max_r.dim,
        shortening_lhs=dual_s_rest.dim - c_max_rest.dim,
        shortening_rhs=project(triple.c_max, rest).dim - project(triple.c_s, rest).dim,
    )


def solvable_for_all_cosets(scheme: Scheme) -> bool:
    """
    Direct check that every coset of C_S^⊥s / C_max has a representative on B̄.

    A coset with label L is solvable iff H·L lies in the column space of the
    B̄ columns of H, so all q^{k+s} labels are tested in one pass.
    """
    check_enumerable(scheme.triple.q, scheme.k + scheme.s, "coset enumeration")
    generators = np.concatenate([scheme.secret_transversal, scheme.randomness_transversal], axis=0)
    labels = scheme.gf(coefficient_vectors(scheme.triple.q, generators.shape[0])) @ generators
    syndromes = labels @ scheme.parity.T
    columns = share_columns(scheme.rest, scheme.n, symplectic=True)
    if columns:
        reachable = Subspace.span(scheme.gf, scheme.parity[:, columns].T, ambient_dim=scheme.n)
    else:
        reachable = Subspace.zero(scheme.gf, scheme.n)
    return bool(np.all(membership(reachable, syndromes)))


def all_subsets(n: int) -> list[tuple[int, ...]]:
    """Every subset of {1..n}, by size and then lexicographically."""
    return [subset for size in range(n + 1) for subset in combinations(range(1, n + 1), size)]


def access_structure(
    triple: CodeTriple,
    subsets: Iterable[Iterable[int]] | None = None,
    with_sufficient_bound: bool = True,
) -> list[AccessRecord]:
    """
    Classify share subsets (all 2^n by default).

    The coset-distance bound is skipped when ``with_sufficient_bound`` is off
    or its enumeration exceeds the guard; the record then carries None.
    """
    chosen = all_subsets(triple.n) if subsets is None else [as_share_set(a) for a in subsets]
    distance: int | None = None
    if with_sufficient_bound:
        try:
            distance = shared_coset_distance(triple)
        except (EnumerationTooLarge, EmptyDifference) as exc:
            logger.info("Skipping the coset-distance bound: %s", exc)

    records = []
    for subset in chosen:
        result = classify(triple, subset)
        records.append(
            AccessRecord(
                subset=list(subset),
                leakage_dim=result.leakage,
                access_class=result.access.value,
                advance_shareable=is_advance_shareable(triple, subset),
                sufficient_bound_holds=None if distance is None else len(subset) <= distance - 1,
            )
        )
    logger.debug("Classified %d subsets of %r", len(records), triple)
    return records
