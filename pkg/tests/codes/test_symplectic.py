import numpy as np
import pytest

from app.algebra.finite_field import as_ints, field_new
from app.algebra.linalg import Subspace
from app.codes.fixtures import ternary_c_max_rows
from app.codes.symplectic import (
    coset_distance,
    css_components,
    css_subspace,
    is_deterministic,
    is_self_orthogonal,
    random_triple,
    swt,
    symplectic_dual,
    symplectic_ip,
    validate_triple,
    witt_complete,
)
from app.core.config import Config
from app.core.errors import (
    DimensionMismatch,
    EmptyDifference,
    InclusionViolated,
    NotASubspace,
    NotSelfDual,
    NotSelfOrthogonal,
    TripleViolation,
)


def test_symplectic_product_is_alternating(gf3):
    u = gf3([1, 2, 0, 1])
    v = gf3([0, 1, 1, 2])
    assert int(symplectic_ip(u, v)) == (-int(symplectic_ip(v, u))) % 3
    assert int(symplectic_ip(u, u)) == 0


def test_symplectic_weight():
    assert swt([1, 0, 0, 0, 0, 1]) == 2
    assert swt([1, 0, 0, 1, 0, 0]) == 1
    assert swt([0, 0, 0, 0]) == 0


def test_dual_dimension_and_involution(ternary_triple):
    c_r = ternary_triple.c_r
    dual = symplectic_dual(c_r)
    assert dual.dim == 2 * ternary_triple.n - c_r.dim
    assert symplectic_dual(dual) == c_r


def test_lagrangian_is_its_own_dual(bell_triple, ternary_triple):
    for triple in (bell_triple, ternary_triple):
        assert symplectic_dual(triple.c_max) == triple.c_max
        assert is_self_orthogonal(triple.c_max)


def test_not_self_orthogonal(gf2):
    # (1|0) and (0|1) on one share pair to 1
    space = Subspace.span(gf2.gf, [[1, 0], [0, 1]], symplectic=True)
    assert not is_self_orthogonal(space)
    with pytest.raises(NotSelfOrthogonal):
        witt_complete(space)


def test_coset_distance_of_worked_examples(bell_triple, ternary_triple):
    assert coset_distance(bell_triple.c_max, bell_triple.c_s) == 2
    assert coset_distance(ternary_triple.c_max, ternary_triple.c_s) == 3


def test_coset_distance_edge_cases(bell_triple):
    with pytest.raises(EmptyDifference):
        coset_distance(bell_triple.c_max, bell_triple.c_max)
    with pytest.raises(NotASubspace):
        coset_distance(bell_triple.c_s, bell_triple.c_max)


def test_css_components(ternary_triple):
    x_code, z_code, is_css = css_components(ternary_triple.c_max)
    assert is_css
    assert x_code == z_code
    assert x_code.dim == 2


def test_css_components_detects_mixed_vectors(gf2):
    # (1,1|1,1) is isotropic but neither (a|0) nor (0|b)
    space = Subspace.span(gf2.gf, [[1, 1, 1, 1]], symplectic=True)
    assert not css_components(space)[2]


def test_witt_complete_keeps_css_form(ternary_triple):
    c_max = witt_complete(ternary_triple.c_r)
    assert c_max.dim == ternary_triple.n
    assert ternary_triple.c_r.is_subspace_of(c_max)
    assert symplectic_dual(c_max) == c_max
    assert css_components(c_max)[2]


def test_witt_complete_extends_ternary_halves_symmetrically(ternary_triple):
    c_max = witt_complete(ternary_triple.c_r)
    assert c_max == Subspace.span(ternary_triple.field.gf, ternary_c_max_rows(), symplectic=True)
    x_code, z_code, _ = css_components(c_max)
    assert x_code == z_code


def test_witt_complete_single_qubit_picks_x_row(gf2):
    zero = Subspace.zero(gf2.gf, 2, symplectic=True)
    assert witt_complete(zero) == Subspace.span(gf2.gf, [[1, 0]], symplectic=True)


def test_witt_complete_falls_back_past_the_enumeration_guard(ternary_triple, monkeypatch):
    monkeypatch.setattr(Config, "ADVSHARE_MAX_DIM", 4)
    c_max = witt_complete(ternary_triple.c_r)
    assert c_max.dim == 4
    assert ternary_triple.c_r.is_subspace_of(c_max)
    assert symplectic_dual(c_max) == c_max
    assert css_components(c_max)[2]


def test_witt_complete_leaves_lagrangian_input_unchanged(bell_triple, ternary_triple):
    assert witt_complete(bell_triple.c_max) == bell_triple.c_max
    assert witt_complete(ternary_triple.c_max) == ternary_triple.c_max


def test_witt_complete_from_zero_with_rng(gf3):
    zero = Subspace.zero(gf3.gf, 6, symplectic=True)
    c_max = witt_complete(zero, rng=np.random.default_rng(3))
    assert c_max.dim == 3
    assert symplectic_dual(c_max) == c_max


def test_validate_triple_accepts_fixtures(bell_triple, ternary_triple):
    assert (bell_triple.n, bell_triple.k, bell_triple.s) == (2, 2, 0)
    assert (ternary_triple.n, ternary_triple.k, ternary_triple.s) == (4, 2, 2)


def test_validate_triple_reports_dimension_mismatch(bell_triple):
    with pytest.raises(DimensionMismatch) as excinfo:
        validate_triple(bell_triple.field, bell_triple.c_s, bell_triple.c_r, bell_triple.c_max, n=2, k=1, s=0)
    assert any("dim C_S" in v for v in excinfo.value.violations)


def test_validate_triple_reports_missing_inclusion(gf2, bell_triple):
    other = Subspace.span(gf2.gf, [[1, 0, 0, 0]], symplectic=True)
    with pytest.raises(TripleViolation) as excinfo:
        validate_triple(gf2, other, bell_triple.c_r, bell_triple.c_max, n=2, k=1, s=0)
    assert isinstance(excinfo.value, InclusionViolated)
    assert "C_S ⊄ C_R" in excinfo.value.violations


def test_validate_triple_rejects_non_lagrangian_c_max(gf2):
    # CSS code with X and Z parts both spanned by 10 is not isotropic
    c_max = css_subspace(Subspace.span(gf2.gf, [[1, 0]]), Subspace.span(gf2.gf, [[1, 0]]))
    zero = Subspace.zero(gf2.gf, 4, symplectic=True)
    with pytest.raises(NotSelfDual):
        validate_triple(gf2, zero, c_max, c_max, n=2, k=2, s=0)


def test_is_deterministic(bell_triple, ternary_triple):
    assert is_deterministic(bell_triple)
    assert not is_deterministic(ternary_triple)


def test_random_triple_is_valid_and_seeded():
    field = field_new(2)
    first = random_triple(field, 3, 1, 1, rng=11)
    second = random_triple(field, 3, 1, 1, rng=11)
    assert (first.c_s.dim, first.c_r.dim, first.c_max.dim) == (1, 2, 3)
    assert as_ints(first.c_max.basis).tolist() == as_ints(second.c_max.basis).tolist()
