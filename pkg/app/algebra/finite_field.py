"""
Exact arithmetic in F_{p^m}: field construction, the trace map, the trace Gram
matrix of the polynomial basis and the F_p-linear expansion between F_q^{2n}
and F_p^{2mn}.

Elements are galois ``FieldArray`` values. Their integer encoding is the
coefficient vector in the polynomial basis read base p with the lowest degree
first, so in GF(9) the integer 6 is 0 + 2x.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from typing import Sequence, Union

import galois
import numpy as np

from app.core.config import config
from app.core.errors import FieldTooLarge, NonPrimeCharacteristic, OddLengthVector, ReducibleModulus
from app.core.logging_config import get_logger

logger = get_logger(__name__)

ModulusLike = Union[None, int, Sequence[int], galois.Poly]


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field F_q with q = p^m, its polynomial basis and trace Gram matrix."""

    p: int
    m: int
    modulus: galois.Poly | None
    gf: type[galois.FieldArray] = dataclass_field(repr=False)
    basis: tuple[int, ...] = dataclass_field(repr=False)
    gram: galois.FieldArray = dataclass_field(repr=False)
    gram_inverse: galois.FieldArray = dataclass_field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def prime_field(self) -> type[galois.FieldArray]:
        return galois.GF(self.p)

    def __call__(self, values) -> galois.FieldArray:
        """Lift integers (or nested lists of integers) into the field."""
        return self.gf(as_ints(values))

    def zeros(self, *shape: int) -> galois.FieldArray:
        return self.gf.Zeros(shape)

    def _key(self) -> tuple[int, int, int]:
        return (self.p, self.m, int(self.modulus) if self.modulus is not None else 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return f"GF({self.q})"


def as_ints(values) -> np.ndarray:
    """Integer view of field elements (or of plain integers)."""
    if isinstance(values, galois.FieldArray):
        return values.view(np.ndarray).astype(np.int64)
    return np.asarray(values, dtype=np.int64)


def _parse_modulus(p: int, m: int, modulus: ModulusLike) -> galois.Poly:
    prime_field = galois.GF(p)
    if isinstance(modulus, galois.Poly):
        return modulus
    if isinstance(modulus, (int, np.integer)):
        return galois.Poly.Int(int(modulus), field=prime_field)
    return galois.Poly([int(c) % p for c in modulus], field=prime_field, order="asc")


def field_new(p: int, m: int = 1, modulus: ModulusLike = None) -> FieldSpec:
    """
    Build a validated FieldSpec for F_{p^m}.

    Args:
        p: Prime characteristic.
        m: Extension degree, at least 1.
        modulus: Monic irreducible polynomial of degree m, given as a galois
            ``Poly``, its integer encoding, or a coefficient sequence with the
            lowest degree first. Ignored when m = 1. Defaults to the
            lexicographically least monic irreducible.

    Raises:
        NonPrimeCharacteristic: p is not prime or m < 1.
        FieldTooLarge: p^m exceeds ``ADVSHARE_MAX_FIELD_ORDER``.
        ReducibleModulus: the modulus is not monic, has the wrong degree or factors.
    """
    if not galois.is_prime(int(p)) or int(m) < 1:
        raise NonPrimeCharacteristic(f"p = {p}, m = {m} does not describe a prime-power field")
    p, m = int(p), int(m)
    if p**m > config.ADVSHARE_MAX_FIELD_ORDER:
        raise FieldTooLarge(f"q = {p}^{m} exceeds the field order cap {config.ADVSHARE_MAX_FIELD_ORDER}")

    if m == 1:
        return _build_field(p, 1, 0)

    if modulus is None:
        poly = galois.irreducible_poly(p, m, method="min")
    else:
        poly = _parse_modulus(p, m, modulus)
        if poly.degree != m or not poly.is_monic or not poly.is_irreducible():
            raise ReducibleModulus(f"{poly} is not a monic irreducible polynomial of degree {m} over GF({p})")
    return _build_field(p, m, int(poly))


@lru_cache(maxsize=None)
def _build_field(p: int, m: int, modulus_int: int) -> FieldSpec:
    prime_field = galois.GF(p)
    if m == 1:
        gf = prime_field
        modulus = None
    else:
        modulus = galois.Poly.Int(modulus_int, field=prime_field)
        gf = galois.GF(p**m, irreducible_poly=modulus)

    basis = tuple(p**i for i in range(m))
    gamma = gf(list(basis))
    gram = (gamma[:, None] * gamma[None, :]).field_trace()
    gram = prime_field(as_ints(gram))
    if np.linalg.matrix_rank(gram) != m:
        raise ReducibleModulus(f"trace Gram matrix of GF({p**m}) is singular")
    gram_inverse = np.linalg.inv(gram)

    logger.debug("Built GF(%d) with modulus %s", p**m, modulus)
    return FieldSpec(p=p, m=m, modulus=modulus, gf=gf, basis=basis, gram=gram, gram_inverse=gram_inverse)


def field_from_order(q: int, modulus: ModulusLike = None) -> FieldSpec:
    """Build the field with q elements; q must be a prime power."""
    if q < 2:
        raise NonPrimeCharacteristic(f"q = {q} is not a prime power")
    primes, multiplicities = galois.factors(int(q))
    if len(primes) != 1:
        raise NonPrimeCharacteristic(f"q = {q} is not a prime power")
    return field_new(int(primes[0]), int(multiplicities[0]), modulus)


def trace(field: FieldSpec, x) -> int:
    """Tr_{q/p}(x) = x + x^p + ... + x^{p^{m-1}} as an integer in 0..p-1."""
    return int(as_ints(field.gf(x).field_trace()))


def element_digits(field: FieldSpec, values) -> np.ndarray:
    """Coefficient digits of integer-encoded elements, lowest degree first; shape (..., m)."""
    ints = as_ints(values)
    powers = field.p ** np.arange(field.m, dtype=np.int64)
    return (ints[..., None] // powers) % field.p


def digits_to_elements(field: FieldSpec, digits) -> np.ndarray:
    powers = field.p ** np.arange(field.m, dtype=np.int64)
    return (np.asarray(digits, dtype=np.int64) * powers).sum(axis=-1)


def phi_expand(field: FieldSpec, v) -> galois.FieldArray:
    """
    Expand (a|b) in F_q^{2n} to F_p^{2mn}.

    The a-half becomes the basis coefficients of each a_i. The b-half becomes
    coeff(b_i) @ M, so that the F_p-symplectic product of two expansions
    equals the trace of the F_q-symplectic product of the originals.
    """
    vec = as_ints(v).reshape(-1)
    if vec.size % 2:
        raise OddLengthVector(f"symplectic vector has odd length {vec.size}")
    n = vec.size // 2
    if n == 0:
        return field.prime_field.Zeros(0)
    a_digits = element_digits(field, vec[:n]).reshape(-1)
    b_coeffs = field.prime_field(element_digits(field, vec[n:]))
    b_digits = as_ints(b_coeffs @ field.gram).reshape(-1)
    return field.prime_field(np.concatenate([a_digits, b_digits]))


def phi_compress(field: FieldSpec, u) -> galois.FieldArray:
    """Inverse of :func:`phi_expand`."""
    vec = as_ints(u).reshape(-1)
    if vec.size % (2 * field.m):
        raise OddLengthVector(f"length {vec.size} is not a multiple of 2m = {2 * field.m}")
    n = vec.size // (2 * field.m)
    if n == 0:
        return field.gf.Zeros(0)
    digits = vec.reshape(2, n, field.m)
    a = digits_to_elements(field, digits[0])
    b_coeffs = field.prime_field(digits[1]) @ field.gram_inverse
    b = digits_to_elements(field, as_ints(b_coeffs))
    return field.gf(np.concatenate([a, b]))
