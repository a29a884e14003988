import numpy as np
import pytest

from app.core.errors import DimensionMismatch, NotADensity
from app.simulation.measures import (
    SubsystemDensity,
    holevo,
    mixture,
    overlap,
    reduce_states,
    trace_distance,
    von_neumann_entropy,
)

BELL = np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2)
PRODUCT = np.array([1, 0, 0, 0], dtype=np.complex128)


def pure(vector, subset=(1,), q=2):
    return SubsystemDensity(subset=subset, q=q, factor=np.asarray(vector, dtype=np.complex128).reshape(-1, 1))


def test_reduced_bell_state_is_maximally_mixed():
    rho = reduce_states(BELL, 2, 2, (1,))
    assert np.allclose(rho.matrix, np.eye(2) / 2)
    assert von_neumann_entropy(rho) == pytest.approx(1.0)


def test_reduction_keeps_share_order():
    # |01⟩: share 1 holds 0 and share 2 holds 1
    state = np.array([0, 1, 0, 0], dtype=np.complex128)
    assert np.allclose(reduce_states(state, 2, 2, (2,)).matrix, np.diag([0, 1]))
    assert np.allclose(reduce_states(state, 2, 2, (1,)).matrix, np.diag([1, 0]))


def test_full_and_empty_reductions():
    assert reduce_states(BELL, 2, 2, (1, 2)).dim == 4
    empty = reduce_states(BELL, 2, 2, ())
    assert empty.dim == 1
    assert von_neumann_entropy(empty) == pytest.approx(0.0)


def test_trace_distance_of_orthogonal_pure_states():
    zero, one = pure([1, 0]), pure([0, 1])
    assert trace_distance(zero, one) == pytest.approx(1.0)
    assert trace_distance(zero, zero) == pytest.approx(0.0, abs=1e-12)
    assert overlap(zero, one) == pytest.approx(0.0)


def test_gram_route_agrees_with_dense_route():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(16, 1)) + 1j * rng.normal(size=(16, 1))
    b = rng.normal(size=(16, 1)) + 1j * rng.normal(size=(16, 1))
    rho = SubsystemDensity((1, 2, 3, 4), 2, a / np.linalg.norm(a))
    sigma = SubsystemDensity((1, 2, 3, 4), 2, b / np.linalg.norm(b))
    dense = 0.5 * np.abs(np.linalg.eigvalsh(rho.matrix - sigma.matrix)).sum()
    assert trace_distance(rho, sigma) == pytest.approx(dense)
    assert overlap(rho, sigma) == pytest.approx(np.trace(rho.matrix @ sigma.matrix).real)


def test_mixture_and_holevo_of_a_classical_bit():
    zero, one = pure([1, 0]), pure([0, 1])
    mixed = mixture([zero, one])
    assert np.allclose(mixed.matrix, np.eye(2) / 2)
    assert holevo([zero, one]) == pytest.approx(1.0)
    assert holevo([zero, zero]) == pytest.approx(0.0, abs=1e-12)
    assert holevo([zero, one], base=4) == pytest.approx(0.5)


def test_density_validation():
    with pytest.raises(NotADensity):
        pure([1, 1])
    with pytest.raises(DimensionMismatch):
        pure([1, 0, 0])
    with pytest.raises(DimensionMismatch):
        trace_distance(pure([1, 0]), pure(PRODUCT, subset=(1, 2)))
    with pytest.raises(DimensionMismatch):
        holevo([])
