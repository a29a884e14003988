"""
Canonical-form linear algebra over F_q.

Subspaces are held as RREF bases with zero rows removed, so equality of two
subspaces is entry-wise equality of their bases. A subspace records whether
it lives in a symplectic ambient F_q^{2n}, where share i owns the coordinate
pair (a_i, b_i), or in a plain ambient F_q^n.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import galois
import numpy as np

from app.algebra.finite_field import as_ints
from app.core.config import config
from app.core.errors import AmbientMismatch, EnumerationTooLarge, IndexOutOfRange, NoSolution, NotASubspace
from app.core.logging_config import get_logger

logger = get_logger(__name__)

ShareSet = Iterable[int]


def rref(matrix: galois.FieldArray) -> tuple[galois.FieldArray, int]:
    """Gauss-Jordan canonical form with zero rows removed, and the rank."""
    gf = type(matrix)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return gf.Zeros((0, cols)), 0
    reduced = matrix.row_reduce()
    nonzero = np.any(as_ints(reduced) != 0, axis=1)
    reduced = reduced[nonzero]
    return reduced, int(reduced.shape[0])


def pivot_columns(reduced: galois.FieldArray) -> np.ndarray:
    """Pivot column of each row of an RREF matrix without zero rows."""
    if reduced.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    return np.argmax(as_ints(reduced) != 0, axis=1)


def rank(matrix: galois.FieldArray) -> int:
    return rref(matrix)[1]


@dataclass(frozen=True, eq=False)
class Subspace:
    """An F_q-linear subspace held by its canonical RREF basis."""

    gf: type[galois.FieldArray]
    ambient_dim: int
    basis: galois.FieldArray
    symplectic: bool = False

    @classmethod
    def span(
        cls,
        gf: type[galois.FieldArray],
        rows,
        ambient_dim: int | None = None,
        symplectic: bool = False,
    ) -> "Subspace":
        ints = as_ints(rows)
        if ambient_dim is None:
            if ints.ndim != 2:
                raise AmbientMismatch("ambient dimension is required for an empty generator list")
            ambient_dim = int(ints.shape[1])
        ints = ints.reshape(-1, ambient_dim)
        if symplectic and ambient_dim % 2:
            raise AmbientMismatch(f"symplectic ambient must be even, got {ambient_dim}")
        reduced, _ = rref(gf(ints))
        return cls(gf=gf, ambient_dim=ambient_dim, basis=reduced, symplectic=symplectic)

    @classmethod
    def zero(cls, gf: type[galois.FieldArray], ambient_dim: int, symplectic: bool = False) -> "Subspace":
        return cls(gf=gf, ambient_dim=ambient_dim, basis=gf.Zeros((0, ambient_dim)), symplectic=symplectic)

    @classmethod
    def full(cls, gf: type[galois.FieldArray], ambient_dim: int, symplectic: bool = False) -> "Subspace":
        return cls(gf=gf, ambient_dim=ambient_dim, basis=gf.Identity(ambient_dim), symplectic=symplectic)

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def n_shares(self) -> int:
        return self.ambient_dim // 2 if self.symplectic else self.ambient_dim

    @property
    def order(self) -> int:
        return int(self.gf.order)

    @property
    def pivots(self) -> np.ndarray:
        return pivot_columns(self.basis)

    def _key(self) -> tuple:
        return (self.order, self.ambient_dim, self.symplectic, as_ints(self.basis).tobytes())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self.gf is other.gf and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        kind = "symplectic" if self.symplectic else "plain"
        return f"Subspace(GF({self.order}), dim={self.dim}, ambient={self.ambient_dim}, {kind})"

    def contains(self, vectors) -> bool:
        """True when every given vector lies in the subspace."""
        return bool(np.all(membership(self, vectors)))

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return bool(np.all(membership(other, self.basis)))


def _check_ambient(v: Subspace, w: Subspace) -> None:
    if v.ambient_dim != w.ambient_dim or v.gf is not w.gf:
        raise AmbientMismatch(f"{v!r} and {w!r} do not share an ambient space")


def membership(space: Subspace, vectors) -> np.ndarray:
    """Boolean per row: is the row in ``space``. Reduces each row against the RREF basis."""
    rows = space.gf(as_ints(vectors)).reshape(-1, space.ambient_dim)
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    if space.dim == 0:
        return ~np.any(as_ints(rows) != 0, axis=1)
    residual = rows - rows[:, space.pivots] @ space.basis
    return ~np.any(as_ints(residual) != 0, axis=1)


@dataclass(frozen=True)
class LinearSolution:
    particular: galois.FieldArray
    kernel: Subspace


def solve(matrix: galois.FieldArray, rhs) -> LinearSolution:
    """
    Solve A x = b exactly.

    Returns the particular solution with every free variable set to zero and
    a basis of the homogeneous solutions.

    Raises:
        NoSolution: b is outside the column space of A.
    """
    gf = type(matrix)
    rows, cols = matrix.shape
    b = gf(as_ints(rhs)).reshape(-1)
    if b.size != rows:
        raise AmbientMismatch(f"right-hand side has length {b.size}, expected {rows}")
    if rows == 0:
        return LinearSolution(gf.Zeros(cols), Subspace.full(gf, cols))

    augmented = np.concatenate([matrix, b.reshape(rows, 1)], axis=1)
    reduced, _ = rref(augmented)
    pivots = pivot_columns(reduced)
    if np.any(pivots == cols):
        raise NoSolution("right-hand side is not in the column space")

    particular = gf.Zeros(cols)
    if pivots.size:
        particular[pivots] = reduced[:, cols]
    if cols == 0:
        kernel = Subspace.zero(gf, 0)
    else:
        kernel = Subspace.span(gf, matrix.null_space(), ambient_dim=cols)
    return LinearSolution(particular, kernel)


def subspace_sum(v: Subspace, w: Subspace) -> Subspace:
    _check_ambient(v, w)
    stacked = np.concatenate([v.basis, w.basis], axis=0)
    return Subspace.span(v.gf, stacked, ambient_dim=v.ambient_dim, symplectic=v.symplectic)


def intersect(v: Subspace, w: Subspace) -> Subspace:
    """V ∩ W by the Zassenhaus algorithm."""
    _check_ambient(v, w)
    size = v.ambient_dim
    if v.dim == 0 or w.dim == 0:
        return Subspace.zero(v.gf, size, v.symplectic)
    top = np.concatenate([v.basis, v.basis], axis=1)
    bottom = np.concatenate([w.basis, v.gf.Zeros((w.dim, size))], axis=1)
    reduced, _ = rref(np.concatenate([top, bottom], axis=0))
    left_zero = ~np.any(as_ints(reduced[:, :size]) != 0, axis=1)
    return Subspace.span(v.gf, reduced[left_zero][:, size:], ambient_dim=size, symplectic=v.symplectic)


def quotient_dim(v: Subspace, w: Subspace) -> int:
    """dim V/W; W must be contained in V."""
    if not w.is_subspace_of(v):
        raise NotASubspace(f"{w!r} is not contained in {v!r}")
    return v.dim - w.dim


def share_columns(shares: ShareSet, n_shares: int, symplectic: bool) -> list[int]:
    """Column indices owned by 1-based share indices: i and n+i in the symplectic case."""
    chosen = sorted(set(int(i) for i in shares))
    for i in chosen:
        if not 1 <= i <= n_shares:
            raise IndexOutOfRange(f"share index {i} outside 1..{n_shares}")
    columns = [i - 1 for i in chosen]
    if symplectic:
        columns += [n_shares + i - 1 for i in chosen]
    return columns


def complement(shares: ShareSet, n_shares: int) -> tuple[int, ...]:
    chosen = set(int(i) for i in shares)
    share_columns(chosen, n_shares, symplectic=False)
    return tuple(i for i in range(1, n_shares + 1) if i not in chosen)


def restrict_support(v: Subspace, shares: ShareSet) -> Subspace:
    """V ∩ F_q^A: the vectors of V vanishing on every share outside A."""
    outside = share_columns(complement(shares, v.n_shares), v.n_shares, v.symplectic)
    if not outside or v.dim == 0:
        return v if not outside else Subspace.zero(v.gf, v.ambient_dim, v.symplectic)
    coefficients = v.basis[:, outside].left_null_space()
    if coefficients.shape[0] == 0:
        return Subspace.zero(v.gf, v.ambient_dim, v.symplectic)
    return Subspace.span(v.gf, coefficients @ v.basis, ambient_dim=v.ambient_dim, symplectic=v.symplectic)


def project(v: Subspace, shares: ShareSet) -> Subspace:
    """P_A(V): coordinates of the shares in A, ambient 2|A| (symplectic) or |A|."""
    columns = share_columns(shares, v.n_shares, v.symplectic)
    if not columns:
        return Subspace.zero(v.gf, 0, v.symplectic)
    return Subspace.span(v.gf, v.basis[:, columns], ambient_dim=len(columns), symplectic=v.symplectic)


def complete_basis(w: Subspace, v: Subspace) -> galois.FieldArray:
    """
    Pivot completion: rows of V's RREF basis whose cosets mod W form a basis of V/W.

    A vector of V is determined by its entries at V's pivot columns, so W is
    mapped to those coordinates, reduced, and the basis rows of V sitting at
    the non-pivot coordinates are returned in ascending order.
    """
    if not w.is_subspace_of(v):
        raise NotASubspace(f"{w!r} is not contained in {v!r}")
    if w.dim == 0:
        return v.basis.copy()
    coordinates, _ = rref(w.basis[:, v.pivots])
    taken = set(int(c) for c in pivot_columns(coordinates))
    rest = [i for i in range(v.dim) if i not in taken]
    return v.basis[rest]


def check_enumerable(order: int, dim: int, what: str = "space") -> None:
    """Raise EnumerationTooLarge when order**dim exceeds 2**enumeration_bits."""
    bits = config.enumeration_bits()
    if dim * np.log2(order) > bits + 1e-9:
        raise EnumerationTooLarge(
            f"{what} has {order}^{dim} elements, above the guard 2^{bits} (raise ADVSHARE_MAX_DIM to allow)"
        )


def coefficient_vectors(order: int, dim: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic list of F_q^dim coefficient vectors (first coordinate most significant)."""
    stop = order**dim if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    powers = order ** np.arange(dim - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers) % order


def iter_elements(v: Subspace, chunk: int = 4096, skip_zero: bool = False) -> Iterator[galois.FieldArray]:
    """Yield every vector of V in chunks (rows of a FieldArray)."""
    check_enumerable(v.order, v.dim, repr(v))
    total = v.order**v.dim
    logger.debug("Enumerating %d elements of %r", total, v)
    for start in range(0, total, chunk):
        coefficients = coefficient_vectors(v.order, v.dim, start, min(total, start + chunk))
        if skip_zero and start == 0:
            coefficients = coefficients[1:]
        if coefficients.shape[0] == 0:
            continue
        if v.dim == 0:
            yield v.gf.Zeros((coefficients.shape[0], v.ambient_dim))
        else:
            yield v.gf(coefficients) @ v.basis


def all_elements(v: Subspace, skip_zero: bool = False) -> galois.FieldArray:
    chunks = list(iter_elements(v, chunk=1 << 16, skip_zero=skip_zero))
    if not chunks:
        return v.gf.Zeros((0, v.ambient_dim))
    return np.concatenate(chunks, axis=0)


def enumerate_subspaces(v: Subspace, dim: int) -> list[Subspace]:
    """
    Every dim-dimensional subspace of V, each generated once.

    Walks all RREF coefficient patterns over V's own coordinates: a choice of
    pivot columns plus free entries to the right of each pivot.
    """
    check_enumerable(v.order, v.dim, repr(v))
    if not 0 <= dim <= v.dim:
        return []
    found: list[Subspace] = []
    for pivots in itertools.combinations(range(v.dim), dim):
        pivot_set = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, v.dim) if j not in pivot_set]
        for values in itertools.product(range(v.order), repeat=len(free)):
            pattern = np.zeros((dim, v.dim), dtype=np.int64)
            for i, p in enumerate(pivots):
                pattern[i, p] = 1
            for (i, j), value in zip(free, values):
                pattern[i, j] = value
            rows = v.gf(pattern) @ v.basis if dim else v.gf.Zeros((0, v.ambient_dim))
            found.append(Subspace.span(v.gf, rows, ambient_dim=v.ambient_dim, symplectic=v.symplectic))
    return found


def as_share_set(shares: Sequence[int] | None) -> tuple[int, ...]:
    return tuple(sorted(set(int(i) for i in shares or ())))
