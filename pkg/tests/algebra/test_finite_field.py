import itertools

import numpy as np
import pytest

from app.algebra.finite_field import (
    as_ints,
    element_digits,
    field_from_order,
    field_new,
    phi_compress,
    phi_expand,
    trace,
)
from app.codes.symplectic import symplectic_ip
from app.core.errors import FieldTooLarge, NonPrimeCharacteristic, OddLengthVector, ReducibleModulus


def test_prime_field_arithmetic(gf3):
    a, b = gf3([2]), gf3([2])
    assert as_ints(a + b).tolist() == [1]
    assert as_ints(a * b).tolist() == [1]
    assert gf3.q == 3 and gf3.m == 1
    assert str(gf3) == "GF(3)"


def test_extension_field_encoding(gf4):
    # 2 encodes x and 3 encodes 1 + x; x^2 = x + 1 for the least irreducible x^2 + x + 1
    x = gf4([2])
    assert as_ints(x * x).tolist() == [3]
    assert as_ints(gf4([2]) + gf4([3])).tolist() == [1]


def test_field_from_order_factors_prime_powers():
    assert field_from_order(9).p == 3
    assert field_from_order(9).m == 2
    assert field_from_order(7).m == 1


@pytest.mark.parametrize("q", [1, 6, 12])
def test_field_from_order_rejects_non_prime_powers(q):
    with pytest.raises(NonPrimeCharacteristic):
        field_from_order(q)


def test_field_new_rejects_composite_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        field_new(4)


def test_reducible_modulus_is_rejected():
    # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, modulus=[1, 0, 1])


def test_explicit_irreducible_modulus_is_accepted():
    field = field_new(3, 2, modulus=[2, 1, 1])
    assert field.q == 9
    assert field != field_new(3, 2)
    assert field_new(3, 2, modulus=[1, 0, 1]) == field_new(3, 2)


def test_field_order_cap():
    with pytest.raises(FieldTooLarge):
        field_new(2, 17)


def test_trace_of_prime_field_is_identity(gf3):
    assert [trace(gf3, v) for v in range(3)] == [0, 1, 2]


def test_trace_over_gf4(gf4):
    # Tr(x) = x + x^2 = 1 and Tr(1) = 1 + 1 = 0
    assert trace(gf4, 1) == 0
    assert trace(gf4, 2) == 1
    assert trace(gf4, 3) == 1


def test_element_digits_lowest_degree_first():
    field = field_new(3, 2)
    assert element_digits(field, [6]).tolist() == [[0, 2]]
    assert element_digits(field, [5]).tolist() == [[2, 1]]


def test_phi_expand_preserves_trace_of_symplectic_product(gf4):
    rng = np.random.default_rng(7)
    for _ in range(20):
        u = gf4(rng.integers(0, 4, size=4))
        v = gf4(rng.integers(0, 4, size=4))
        expected = trace(gf4, symplectic_ip(u, v))
        eu, ev = phi_expand(gf4, u), phi_expand(gf4, v)
        assert int(symplectic_ip(eu, ev)) == expected


def test_phi_compress_inverts_expand():
    field = field_new(3, 2)
    vector = field([1, 8, 4, 0, 3, 7])
    assert as_ints(phi_compress(field, phi_expand(field, vector))).tolist() == [1, 8, 4, 0, 3, 7]


def test_phi_expand_rejects_odd_length(gf4):
    with pytest.raises(OddLengthVector):
        phi_expand(gf4, [1, 2, 3])


def test_phi_round_trip_is_exhaustive_over_gf4(gf4):
    for a, b in itertools.product(range(4), repeat=2):
        assert as_ints(phi_compress(gf4, phi_expand(gf4, [a, b]))).tolist() == [a, b]


@pytest.mark.parametrize("p, m", [(2, 3), (3, 2)])
def test_phi_round_trip_and_product_on_sampled_vectors(p, m):
    field = field_new(p, m)
    rng = np.random.default_rng(11)
    for _ in range(40):
        n = int(rng.integers(1, 5))
        u = rng.integers(0, field.q, size=2 * n).tolist()
        v = rng.integers(0, field.q, size=2 * n).tolist()
        assert as_ints(phi_compress(field, phi_expand(field, u))).tolist() == u
        expected = trace(field, symplectic_ip(field(u), field(v)))
        assert int(symplectic_ip(phi_expand(field, u), phi_expand(field, v))) == expected


@pytest.mark.parametrize("p, m", [(2, 2), (2, 3), (3, 2)])
def test_trace_is_linear_and_frobenius_invariant(p, m):
    field = field_new(p, m)
    gf = field.gf
    for x in range(field.q):
        tx = trace(field, x)
        assert trace(field, gf(x) ** p) == tx
        for c in range(p):
            assert trace(field, gf(c) * gf(x)) == (c * tx) % p
        for y in range(field.q):
            assert trace(field, gf(x) + gf(y)) == (tx + trace(field, y)) % p
    assert {trace(field, x) for x in range(field.q)} == set(range(p))
