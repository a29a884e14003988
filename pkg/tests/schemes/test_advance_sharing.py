import itertools

import pytest

from app.algebra.finite_field import as_ints
from app.algebra.linalg import restrict_support
from app.core.errors import IndexOutOfRange, LengthMismatch, NoAdvanceRepresentative, NotASubspace
from app.schemes.advance_sharing import (
    AccessClass,
    access_structure,
    advance_diagnostics,
    advance_rep,
    advance_rep_records,
    advance_sufficient,
    all_subsets,
    build_scheme,
    classify,
    decode_label,
    encode_label,
    is_advance_shareable,
    leakage_dim,
    random_coset_choice,
    shared_coset_distance,
    solvable_for_all_cosets,
)


def test_bell_secret_map(bell_scheme):
    assert as_ints(bell_scheme.secret_transversal).tolist() == [[0, 1, 0, 0], [0, 0, 0, 1]]
    assert bell_scheme.randomness_transversal.shape == (0, 4)
    assert as_ints(encode_label(bell_scheme, [1, 0]).vector).tolist() == [0, 1, 0, 0]


def test_build_scheme_accepts_prefix_size(ternary_triple):
    assert build_scheme(ternary_triple, 2).advance_set == (1, 2)
    assert build_scheme(ternary_triple, None).rest == (1, 2, 3, 4)


def test_build_scheme_rejects_unknown_shares(bell_triple):
    with pytest.raises(IndexOutOfRange):
        build_scheme(bell_triple, (3,))


def test_encode_requires_coset_choice(ternary_scheme):
    with pytest.raises(LengthMismatch):
        encode_label(ternary_scheme, [1, 0])
    with pytest.raises(LengthMismatch):
        encode_label(ternary_scheme, [1, 0, 0], [0, 0])


def test_labels_lie_in_the_dual_chain(ternary_scheme):
    triple = ternary_scheme.triple
    label = encode_label(ternary_scheme, [2, 1], [1, 2])
    assert triple.dual_s.contains(label.vector)
    assert not triple.dual_r.contains(label.vector)


def test_decode_recovers_secret_and_choice(ternary_scheme):
    label = encode_label(ternary_scheme, [2, 1], [1, 2])
    shifted = label.vector + ternary_scheme.triple.c_max.basis[0]
    decoded = decode_label(ternary_scheme, shifted)
    assert as_ints(decoded.secret).tolist() == [2, 1]
    assert as_ints(decoded.randomness).tolist() == [1, 2]


def test_ternary_secret_directions_avoid_the_degenerate_v4(ternary_scheme):
    triple = ternary_scheme.triple
    gf = triple.field.gf
    # (v4|0) and (0|v4) with v4 = (0,0,0,1) are orthogonal to C_R, so they cannot carry the secret
    assert triple.dual_r.contains(gf([[0, 0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0, 0, 1]]))
    assert as_ints(ternary_scheme.secret_transversal).tolist() == [
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0],
    ]
    assert as_ints(ternary_scheme.randomness_transversal).tolist() == [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
    ]


def test_random_coset_choice_is_seeded(ternary_scheme):
    first = random_coset_choice(ternary_scheme, 5)
    assert as_ints(first).tolist() == as_ints(random_coset_choice(ternary_scheme, 5)).tolist()
    assert first.size == 2


@pytest.mark.parametrize("a1, a2, m1, m2", list(itertools.product(range(3), repeat=4)))
def test_ternary_advance_representative_formula(ternary_scheme, a1, a2, m1, m2):
    label = [a1, a1, 0, m1, a2, a2, 0, m2]
    expected = [0, 0, (2 * a1) % 3, m1, 0, 0, (2 * a2) % 3, m2]
    assert as_ints(advance_rep(ternary_scheme, label)).tolist() == expected


def test_advance_rep_is_in_the_label_coset(ternary_scheme):
    triple = ternary_scheme.triple
    for record in advance_rep_records(ternary_scheme):
        assert record.error is None
        rep = triple.field.gf(record.representative)
        assert not as_ints(rep[[0, 1, 4, 5]]).any()
        assert triple.c_max.contains(triple.field.gf(record.label) - rep)


def test_advance_rep_records_cover_every_pair(ternary_scheme):
    assert len(advance_rep_records(ternary_scheme)) == 3 ** 4


def test_advance_rep_fails_outside_shareable_sets(bell_triple):
    scheme = build_scheme(bell_triple, (1, 2))
    with pytest.raises(NoAdvanceRepresentative):
        advance_rep(scheme, encode_label(scheme, [1, 0]))
    records = advance_rep_records(scheme, [([0, 0], []), ([0, 1], [])])
    assert records[0].error is None
    assert records[1].representative is None
    assert records[1].error.startswith("NoAdvanceRepresentative")


def test_advance_rep_rejects_labels_outside_the_dual(rs5_triple):
    scheme = build_scheme(rs5_triple, (1,))
    outside = [1, 0, 0, 0, 0, 0, 0, 0, 0, 0]
    assert not rs5_triple.dual_s.contains(outside)
    with pytest.raises(NotASubspace):
        advance_rep(scheme, outside)


def test_ternary_leakage(ternary_triple):
    triple = ternary_triple
    assert leakage_dim(triple, (1, 2, 3)) == 2
    assert leakage_dim(triple, (1, 2, 4)) == 0
    assert leakage_dim(triple, (2, 3, 4)) == 0
    assert leakage_dim(triple, (1, 2)) == 0
    assert leakage_dim(triple, (1, 2, 3, 4)) == 2


def test_classification(ternary_triple, bell_triple):
    assert classify(ternary_triple, (1, 2, 3)).access is AccessClass.QUALIFIED
    assert classify(ternary_triple, (3, 4)).access is AccessClass.FORBIDDEN
    assert classify(bell_triple, ()).access is AccessClass.FORBIDDEN
    assert classify(bell_triple, (1, 2)).leakage == 2


def test_rs_scheme_has_no_intermediate_sets(rs5_triple):
    classes = {classify(rs5_triple, a).access for a in all_subsets(5)}
    assert classes == {AccessClass.FORBIDDEN, AccessClass.QUALIFIED}
    assert restrict_support(rs5_triple.c_r, (1, 2, 3, 4)).dim == 2


def test_advance_shareability(bell_triple, ternary_triple):
    assert is_advance_shareable(bell_triple, (1,))
    assert is_advance_shareable(bell_triple, ())
    assert not is_advance_shareable(bell_triple, (1, 2))
    assert is_advance_shareable(ternary_triple, (1, 2))
    assert is_advance_shareable(ternary_triple, (3, 4))


def test_solvable_for_all_cosets_agrees_with_dimension_test(ternary_triple):
    for subset in all_subsets(4):
        scheme = build_scheme(ternary_triple, subset)
        assert solvable_for_all_cosets(scheme) == is_advance_shareable(ternary_triple, subset)


def test_diagnostics_agree(ternary_scheme):
    diagnostics = advance_diagnostics(ternary_scheme)
    assert diagnostics.advance_shareable
    assert diagnostics.sum_condition
    assert diagnostics.required == 4
    assert diagnostics.isomorphism_lhs == diagnostics.isomorphism_rhs
    assert diagnostics.shortening_lhs == diagnostics.shortening_rhs


def test_diagnostics_on_a_non_shareable_set(bell_triple):
    diagnostics = advance_diagnostics(build_scheme(bell_triple, (1, 2)))
    assert not diagnostics.advance_shareable
    assert not diagnostics.sum_condition
    assert diagnostics.shortening_lhs == diagnostics.shortening_rhs == 0


def test_sufficient_bound(bell_triple, ternary_triple):
    assert shared_coset_distance(ternary_triple) == 3
    assert advance_sufficient(ternary_triple, (1, 2))
    assert not advance_sufficient(ternary_triple, (1, 2, 3))
    assert advance_sufficient(bell_triple, (2,))


def test_access_structure_records(ternary_triple):
    records = access_structure(ternary_triple)
    assert len(records) == 16
    assert [r.subset for r in records[:2]] == [[], [1]]
    by_subset = {tuple(r.subset): r for r in records}
    assert by_subset[(1, 2, 3)].access_class == "qualified"
    assert by_subset[(1, 2)].sufficient_bound_holds
    assert not by_subset[(1, 2, 3)].sufficient_bound_holds
    for record in records:
        if record.sufficient_bound_holds:
            assert record.advance_shareable


def test_access_structure_for_chosen_subsets(bell_triple):
    records = access_structure(bell_triple, [(2, 1)], with_sufficient_bound=False)
    assert len(records) == 1
    assert records[0].subset == [1, 2]
    assert records[0].sufficient_bound_holds is None
