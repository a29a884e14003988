"""
Symplectic geometry of F_q^{2n}: the form, symplectic duals, symplectic weight,
coset distance, completion of a self-orthogonal code to a Lagrangian C_max,
and validation of the nested chain C_S ⊆ C_R ⊆ C_max = C_max^⊥s.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import galois
import numpy as np

from app.algebra.finite_field import FieldSpec, as_ints
from app.algebra.linalg import (
    Subspace,
    check_enumerable,
    coefficient_vectors,
    complete_basis,
    membership,
    rank,
)
from app.core.errors import (
    AmbientMismatch,
    DimensionMismatch,
    EmptyDifference,
    EnumerationTooLarge,
    InclusionViolated,
    NotASubspace,
    NotSelfDual,
    NotSelfOrthogonal,
)
from app.core.logging_config import get_logger

logger = get_logger(__name__)


def symplectic_conjugate(matrix: galois.FieldArray) -> galois.FieldArray:
    """Map each row (c|d) to (d|-c); the result H satisfies x·Hᵀ = ⟨x, (c|d)⟩_s."""
    n = matrix.shape[-1] // 2
    return np.concatenate([matrix[..., n:], -matrix[..., :n]], axis=-1)


def symplectic_ip(u: galois.FieldArray, v: galois.FieldArray) -> galois.FieldArray:
    """⟨(a|b),(c|d)⟩_s = ⟨a,d⟩ − ⟨c,b⟩."""
    if u.shape != v.shape or u.shape[-1] % 2:
        raise AmbientMismatch(f"cannot pair vectors of shapes {u.shape} and {v.shape}")
    n = u.shape[-1] // 2
    return np.dot(u[:n], v[n:]) - np.dot(v[:n], u[n:])


def symplectic_gram(rows: galois.FieldArray, cols: galois.FieldArray) -> galois.FieldArray:
    """Matrix of symplectic products between two stacks of vectors."""
    return rows @ symplectic_conjugate(cols).T


def _require_symplectic(space: Subspace) -> None:
    if not space.symplectic:
        raise AmbientMismatch(f"{space!r} is not a symplectic subspace")


def symplectic_dual(space: Subspace) -> Subspace:
    """C^⊥s = {x : ⟨x, c⟩_s = 0 for all c in C}."""
    _require_symplectic(space)
    if space.dim == 0:
        return Subspace.full(space.gf, space.ambient_dim, symplectic=True)
    kernel = symplectic_conjugate(space.basis).null_space()
    return Subspace.span(space.gf, kernel, ambient_dim=space.ambient_dim, symplectic=True)


def is_self_orthogonal(space: Subspace) -> bool:
    _require_symplectic(space)
    if space.dim == 0:
        return True
    return not np.any(as_ints(symplectic_gram(space.basis, space.basis)) != 0)


def swt_rows(vectors) -> np.ndarray:
    """Symplectic weight of each row: shares i with (a_i, b_i) ≠ (0, 0)."""
    ints = np.atleast_2d(as_ints(vectors))
    n = ints.shape[1] // 2
    return np.count_nonzero((ints[:, :n] != 0) | (ints[:, n:] != 0), axis=1)


def swt(vector) -> int:
    return int(swt_rows(vector)[0])


def coset_distance(outer: Subspace, inner: Subspace) -> int:
    """
    d_s(V1, V2) = min swt over V1 \\ V2 by exhaustive enumeration.

    V1 is written as transversal ⊕ V2 with the transversal coordinates most
    significant, so V1 \\ V2 is exactly the coefficient indices from q^{dim V2} on.
    """
    _require_symplectic(outer)
    if not inner.is_subspace_of(outer):
        raise NotASubspace(f"{inner!r} is not contained in {outer!r}")
    if inner.dim == outer.dim:
        raise EmptyDifference("V1 = V2, so V1 \\ V2 is empty")
    check_enumerable(outer.order, outer.dim, "coset distance enumeration")

    transversal = complete_basis(inner, outer)
    generators = np.concatenate([transversal, inner.basis], axis=0)
    q, dim = outer.order, outer.dim
    total = q**dim
    best = outer.n_shares + 1
    chunk = 1 << 15
    for start in range(q**inner.dim, total, chunk):
        coefficients = coefficient_vectors(q, dim, start, min(total, start + chunk))
        weights = swt_rows(outer.gf(coefficients) @ generators)
        best = min(best, int(weights.min()))
        if best <= 1:
            break
    logger.debug("coset distance of %r over %r is %d", outer, inner, best)
    return best


def css_subspace(x_code: Subspace, z_code: Subspace) -> Subspace:
    """{(a|b) : a ∈ C_X, b ∈ C_Z}."""
    _check_plain_pair(x_code, z_code)
    n = x_code.ambient_dim
    gf = x_code.gf
    x_rows = np.concatenate([x_code.basis, gf.Zeros((x_code.dim, n))], axis=1)
    z_rows = np.concatenate([gf.Zeros((z_code.dim, n)), z_code.basis], axis=1)
    return Subspace.span(gf, np.concatenate([x_rows, z_rows], axis=0), ambient_dim=2 * n, symplectic=True)


def _check_plain_pair(x_code: Subspace, z_code: Subspace) -> None:
    if x_code.ambient_dim != z_code.ambient_dim or x_code.gf is not z_code.gf:
        raise AmbientMismatch("X and Z components must share an ambient space")


def _half_restricted(space: Subspace, keep: str) -> Subspace:
    """Vectors of ``space`` whose other half vanishes, as a plain subspace of the kept half."""
    n = space.n_shares
    other = slice(n, 2 * n) if keep == "x" else slice(0, n)
    kept = slice(0, n) if keep == "x" else slice(n, 2 * n)
    if space.dim == 0:
        return Subspace.zero(space.gf, n)
    coefficients = space.basis[:, other].left_null_space()
    if coefficients.shape[0] == 0:
        return Subspace.zero(space.gf, n)
    return Subspace.span(space.gf, (coefficients @ space.basis)[:, kept], ambient_dim=n)


def css_components(space: Subspace) -> tuple[Subspace, Subspace, bool]:
    """(C_X, C_Z, is_css) with C_X = {a : (a|0) ∈ C} and C_Z = {b : (0|b) ∈ C}."""
    _require_symplectic(space)
    x_code = _half_restricted(space, "x")
    z_code = _half_restricted(space, "z")
    return x_code, z_code, x_code.dim + z_code.dim == space.dim


def _embed_half(plain_rows: galois.FieldArray, keep: str) -> galois.FieldArray:
    gf = type(plain_rows)
    zeros = gf.Zeros(plain_rows.shape)
    halves = [plain_rows, zeros] if keep == "x" else [zeros, plain_rows]
    return np.concatenate(halves, axis=1)


def _next_vector(current: Subspace, css: bool, rng: np.random.Generator | None) -> galois.FieldArray:
    dual = symplectic_dual(current)
    if rng is not None:
        while True:
            coefficients = rng.integers(0, current.order, size=dual.dim)
            candidate = current.gf(coefficients) @ dual.basis
            if not current.contains(candidate):
                return candidate

    candidates: list[galois.FieldArray] = []
    if css:
        for keep in ("x", "z"):
            candidates.append(_embed_half(_half_restricted(dual, keep).basis, keep))
    candidates.append(dual.basis)
    for rows in candidates:
        outside = ~membership(current, rows)
        if np.any(outside):
            return rows[int(np.argmax(outside))]
    raise NotSelfOrthogonal("no vector of C^⊥s lies outside C")


def _isotropic_pair(current: Subspace) -> galois.FieldArray | None:
    """(a|0) and (0|a) for the first isotropic a ∈ C_X^⊥ \\ C_X, when C = C_X × C_X."""
    x_code, z_code, is_css = css_components(current)
    if not is_css or x_code != z_code:
        return None
    perp = _half_restricted(symplectic_dual(current), "x")
    if perp.dim == x_code.dim:
        return None
    try:
        check_enumerable(current.order, perp.dim, f"{perp!r}")
    except EnumerationTooLarge as exc:
        logger.info("Skipping the symmetric Witt step: %s", exc)
        return None
    # first basis row least significant
    coefficients = np.ascontiguousarray(coefficient_vectors(current.order, perp.dim)[1:, ::-1])
    vectors = current.gf(coefficients) @ perp.basis
    norms = (vectors * vectors) @ current.gf.Ones(current.n_shares)
    hits = np.flatnonzero((as_ints(norms) == 0) & ~membership(x_code, vectors))
    if hits.size == 0:
        return None
    a = vectors[int(hits[0])].reshape(1, -1)
    return np.concatenate([_embed_half(a, "x"), _embed_half(a, "z")], axis=0)


def witt_complete(
    c_r: Subspace,
    prefer_css: bool = True,
    rng: np.random.Generator | None = None,
) -> Subspace:
    """
    Extend a self-orthogonal code to a Lagrangian C_max = C_max^⊥s containing it.

    Greedy: while dim C < n, adjoin vectors of C^⊥s \\ C. With ``prefer_css``
    and input of the form C_X × C_X, the pair (a|0), (0|a) is adjoined for the
    first a ∈ C_X^⊥ \\ C_X with a·a = 0, scanning coefficients over the RREF
    basis of C_X^⊥ with the first row least significant; the X and Z halves
    stay equal. Otherwise candidates are the RREF basis rows of C^⊥s in order,
    and for CSS input the rows of the shapes (a|0) and then (0|b) are tried
    first so the result stays in CSS form. Passing ``rng`` draws uniform
    candidates instead.

    Raises:
        NotSelfOrthogonal: C_R is not contained in C_R^⊥s.
    """
    _require_symplectic(c_r)
    if not is_self_orthogonal(c_r):
        raise NotSelfOrthogonal(f"{c_r!r} is not symplectically self-orthogonal")
    css = prefer_css and rng is None and css_components(c_r)[2]
    current = c_r
    while current.dim < current.n_shares:
        rows = _isotropic_pair(current) if css else None
        if rows is None:
            rows = _next_vector(current, css, rng).reshape(1, -1)
        logger.debug("Witt step: adjoining %s to a code of dim %d", as_ints(rows).tolist(), current.dim)
        stacked = np.concatenate([current.basis, rows], axis=0)
        current = Subspace.span(current.gf, stacked, ambient_dim=current.ambient_dim, symplectic=True)
    return current


@dataclass(frozen=True, eq=False)
class CodeTriple:
    """Validated chain C_S ⊆ C_R ⊆ C_max = C_max^⊥s ⊆ C_R^⊥s ⊆ C_S^⊥s."""

    field: FieldSpec
    n: int
    k: int
    s: int
    c_s: Subspace
    c_r: Subspace
    c_max: Subspace

    @cached_property
    def dual_s(self) -> Subspace:
        return symplectic_dual(self.c_s)

    @cached_property
    def dual_r(self) -> Subspace:
        return symplectic_dual(self.c_r)

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self) -> str:
        return f"CodeTriple({self.field}, n={self.n}, k={self.k}, s={self.s})"


def validate_triple(
    field: FieldSpec,
    c_s: Subspace,
    c_r: Subspace,
    c_max: Subspace,
    n: int,
    k: int,
    s: int,
) -> CodeTriple:
    """
    Check every CodeTriple invariant and return the triple.

    Raises:
        DimensionMismatch, InclusionViolated, NotSelfDual: the class of the
            first failed condition; its ``violations`` attribute lists all of them.
    """
    violations: list[tuple[type, str]] = []

    if k < 1 or s < 0 or n - k - s < 0:
        violations.append((DimensionMismatch, f"parameters (n, k, s) = ({n}, {k}, {s}) need k ≥ 1, s ≥ 0, n − k − s ≥ 0"))

    ambient_ok = True
    for name, space in (("C_S", c_s), ("C_R", c_r), ("C_max", c_max)):
        if space.gf is not field.gf or space.ambient_dim != 2 * n or not space.symplectic:
            ambient_ok = False
            violations.append((DimensionMismatch, f"{name} is not a symplectic subspace of {field}^{2 * n}"))

    for name, space, expected in (("C_S", c_s, n - k - s), ("C_R", c_r, n - s), ("C_max", c_max, n)):
        if space.dim != expected:
            violations.append((DimensionMismatch, f"dim {name} = {space.dim}, expected {expected}"))

    if ambient_ok:
        if not c_s.is_subspace_of(c_r):
            violations.append((InclusionViolated, "C_S ⊄ C_R"))
        if not c_r.is_subspace_of(c_max):
            violations.append((InclusionViolated, "C_R ⊄ C_max"))
        dual_max = symplectic_dual(c_max)
        if dual_max != c_max:
            violations.append((NotSelfDual, "C_max ≠ C_max^⊥s"))
        if not dual_max.is_subspace_of(symplectic_dual(c_r)):
            violations.append((InclusionViolated, "C_max^⊥s ⊄ C_R^⊥s"))

    if violations:
        messages = [message for _, message in violations]
        error_class = violations[0][0]
        raise error_class("; ".join(messages), violations=messages)

    return CodeTriple(field=field, n=n, k=k, s=s, c_s=c_s, c_r=c_r, c_max=c_max)


def is_deterministic(triple: CodeTriple) -> bool:
    """Encoding uses no randomness exactly when s = 0 and C_R = C_max."""
    return triple.s == 0 and triple.c_r == triple.c_max


def random_subspace(space: Subspace, dim: int, rng: np.random.Generator) -> Subspace:
    """Uniformly drawn full-rank coefficients give a random dim-dimensional subspace of ``space``."""
    if dim == 0:
        return Subspace.zero(space.gf, space.ambient_dim, space.symplectic)
    while True:
        coefficients = space.gf(rng.integers(0, space.order, size=(dim, space.dim)))
        if rank(coefficients) == dim:
            return Subspace.span(space.gf, coefficients @ space.basis, ambient_dim=space.ambient_dim, symplectic=space.symplectic)


def random_triple(field: FieldSpec, n: int, k: int, s: int, rng: np.random.Generator | int | None) -> CodeTriple:
    """A random valid CodeTriple: random Lagrangian, then random nested C_R and C_S."""
    rng = np.random.default_rng(rng)
    zero = Subspace.zero(field.gf, 2 * n, symplectic=True)
    c_max = witt_complete(zero, prefer_css=False, rng=rng)
    c_r = random_subspace(c_max, n - s, rng)
    c_s = random_subspace(c_r, n - k - s, rng)
    return validate_triple(field, c_s, c_r, c_max, n, k, s)
