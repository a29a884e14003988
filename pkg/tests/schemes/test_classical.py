from fractions import Fraction

import pytest

from app.algebra.finite_field import as_ints, field_new
from app.algebra.linalg import Subspace
from app.core.errors import DimensionMismatch, NotAdvanceShareable, NotASubspace, ParityViolation, VariableUnknown
from app.schemes.classical import (
    JointDistribution,
    advance_shareable_classical,
    classical_encode,
    classical_scheme,
    compare_subsets,
    conditional_mutual_information,
    dealer_forgets_distribution,
    dealer_forgets_experiment,
    forbidden_classical,
    independent,
    joint_distribution,
    mutual_information,
    one_time_pad_scheme,
    ramp_shamir_scheme,
)


@pytest.fixture
def pad():
    return one_time_pad_scheme()


@pytest.fixture(scope="module")
def shamir5():
    return ramp_shamir_scheme(field_new(5), 5, 2, 1)


def test_one_time_pad_encoding(pad):
    assert as_ints(classical_encode(pad, [1], [0])).tolist() == [0, 1]
    assert as_ints(classical_encode(pad, [1], [1])).tolist() == [1, 0]


def test_one_time_pad_single_shares_are_forbidden_and_shareable(pad):
    for subset in ((), (1,), (2,)):
        assert forbidden_classical(pad, subset)
        assert advance_shareable_classical(pad, subset)
    assert not forbidden_classical(pad, (1, 2))
    assert not advance_shareable_classical(pad, (1, 2))


def test_forbidden_equals_advance_shareable(pad, shamir5):
    for scheme in (pad, shamir5):
        assert all(record.agree for record in compare_subsets(scheme))


def test_ramp_shamir_threshold(shamir5):
    assert shamir5.k == 2
    for record in compare_subsets(shamir5):
        assert record.forbidden == (len(record.subset) <= 2)


def test_ramp_shamir_parameter_checks():
    with pytest.raises(ParityViolation):
        ramp_shamir_scheme(field_new(5), 5, 1, 1)
    with pytest.raises(DimensionMismatch):
        ramp_shamir_scheme(field_new(5), 5, 0, 1)


def test_classical_scheme_validation(gf2):
    c1 = Subspace.span(gf2.gf, [[1, 0, 0]])
    c2 = Subspace.span(gf2.gf, [[0, 1, 0]])
    with pytest.raises(NotASubspace):
        classical_scheme(gf2, c1, c2)
    with pytest.raises(DimensionMismatch):
        classical_scheme(gf2, c1, c1)


def test_joint_distribution_is_exact(pad):
    dist = joint_distribution(pad)
    assert dist.variables == ("S", "X1", "X2")
    assert set(dist.table.values()) == {Fraction(1, 4)}
    assert dist.marginal(["S"]) == {(0,): Fraction(1, 2), (1,): Fraction(1, 2)}


def test_joint_distribution_rejects_bad_tables():
    with pytest.raises(ValueError):
        JointDistribution(variables=("A",), table={(0,): Fraction(1, 3)})
    with pytest.raises(VariableUnknown):
        JointDistribution(variables=("A", "A"), table={(0, 0): Fraction(1)})
    dist = JointDistribution(variables=("A",), table={(0,): Fraction(1)})
    with pytest.raises(VariableUnknown):
        dist.marginal(["B"])


def test_information_measures_of_the_pad(pad):
    dist = joint_distribution(pad)
    assert mutual_information(dist, ["X1"], ["S"]) == 0.0
    assert mutual_information(dist, ["X2"], ["S"]) == 0.0
    assert mutual_information(dist, ["X1", "X2"], ["S"]) == pytest.approx(1.0)
    assert conditional_mutual_information(dist, ["X1"], ["S"], ["X2"]) == pytest.approx(1.0)
    assert independent(dist, ["S"], ["X1"])
    assert not independent(dist, ["S"], ["X1"], ["X2"])


def test_dealer_forgets_distribution_decouples_kept_shares(pad):
    forgotten = dealer_forgets_distribution(joint_distribution(pad), (1,))
    assert independent(forgotten, ["X1"], ["S", "X2"])
    assert forgotten.marginal(["S", "X2"]) == joint_distribution(pad).marginal(["S", "X2"])


def test_dealer_forgets_experiment_on_the_pad(pad):
    report = dealer_forgets_experiment(pad, (1,))
    assert report.exact_equality
    assert report.max_deviation == 0.0
    assert len(report.records) == 4
    assert report.original_max_gain == pytest.approx(1.0)


def test_dealer_forgets_on_ramp_shamir(shamir5):
    report = dealer_forgets_experiment(shamir5, (1, 2))
    assert report.exact_equality
    assert report.max_deviation == 0.0
    assert len(report.records) == 4 * 8


def test_dealer_forgets_needs_a_forbidden_set(pad):
    with pytest.raises(NotAdvanceShareable):
        dealer_forgets_experiment(pad, (1, 2))


def test_information_in_other_bases(pad):
    dist = joint_distribution(pad)
    assert mutual_information(dist, ["X1", "X2"], ["S"], base=4) == pytest.approx(0.5)


def skewed_distribution():
    """(S, X1, Y) with S and X1 correlated and Y = X1 mod 2."""
    weights = {}
    for s in range(2):
        for x in range(3):
            weights[(s, x, x % 2)] = Fraction(1 + s + 2 * x + s * x)
    total = sum(weights.values(), Fraction(0))
    return JointDistribution(variables=("S", "X1", "Y"), table={k: w / total for k, w in weights.items()})


def test_chain_rule_for_mutual_information(shamir5):
    dist = joint_distribution(shamir5)
    for first, second in ((["X1"], ["X2"]), (["X1", "X2"], ["X3"]), (["X4"], ["X2", "X5"])):
        joint = mutual_information(dist, first + second, ["S"])
        split = mutual_information(dist, second, ["S"]) + conditional_mutual_information(dist, first, ["S"], second)
        assert joint == pytest.approx(split, abs=1e-9)

    skewed = skewed_distribution()
    joint = mutual_information(skewed, ["X1", "Y"], ["S"])
    split = mutual_information(skewed, ["Y"], ["S"]) + conditional_mutual_information(skewed, ["X1"], ["S"], ["Y"])
    assert joint == pytest.approx(split, abs=1e-12)


def test_processing_shares_cannot_add_information(shamir5):
    skewed = skewed_distribution()
    # Y is a function of X1
    assert mutual_information(skewed, ["Y"], ["S"]) <= mutual_information(skewed, ["X1"], ["S"]) + 1e-12
    assert conditional_mutual_information(skewed, ["Y"], ["S"], ["X1"]) == pytest.approx(0.0, abs=1e-12)

    dist = joint_distribution(shamir5)
    assert mutual_information(dist, ["X1"], ["S"]) <= mutual_information(dist, ["X1", "X2", "X3"], ["S"]) + 1e-12
    assert mutual_information(dist, ["X1", "X2", "X3", "X4"], ["S"], base=5) == pytest.approx(2.0)
