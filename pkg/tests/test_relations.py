import random

import pytest

from category_o.errors import BoundExceededError, NotARootError, WeightError
from category_o.relations import (
    decomposition_enumerate,
    finiteness_order,
    height_one_check,
    injectivity_probe,
    ladder_coefficient,
    lemma_pairs,
    locally_finite_probe,
    power_commutator_check,
    prime_hypothesis,
    relation_coefficient_audit,
)
from category_o.roots import root_system
from category_o.weyl import max_parabolic_for


@pytest.fixture
def a2():
    return root_system("A2")


@pytest.fixture
def sl2():
    return root_system("A1")


def test_decompositions_a2(a2):
    result = decomposition_enumerate(a2, (1, 1), 2)
    assert result.solutions == [(2, 2, 0), (1, 1, 1), (0, 0, 2)]
    assert result.holds


def test_decompositions_simple_root(a2):
    assert decomposition_enumerate(a2, (1, 0), 3).solutions == [(3, 0, 0)]


def test_decompositions_g2_counterexample():
    result = decomposition_enumerate(root_system("G2"), (2, 1), 3)
    assert not result.holds
    assert (0, 0, 0, 0, 1, 1) in result.violations
    assert result.to_json()["counterexample_sum"] == 2


def test_decompositions_reject_bad_input(a2):
    with pytest.raises(BoundExceededError):
        decomposition_enumerate(a2, (1, 1), 0)
    with pytest.raises(BoundExceededError):
        decomposition_enumerate(a2, (1, 1), 50)
    with pytest.raises(NotARootError):
        decomposition_enumerate(a2, (2, 1), 1)


def test_prime_hypothesis():
    assert prime_hypothesis(root_system("A2"), 5) == []
    assert prime_hypothesis(root_system("A2"), 4)
    assert prime_hypothesis(root_system("B2"), 2)
    assert prime_hypothesis(root_system("G2"), 3)
    assert prime_hypothesis(root_system("G2"), 7) == []


def test_finiteness_antidominant(sl2):
    probe = locally_finite_probe(sl2, sl2.weight([-2]), (-1,), 3)
    assert probe.dims == [1, 2, 3, 4]
    assert not probe.locally_finite
    assert probe.agrees


def test_finiteness_dominant(sl2):
    probe = locally_finite_probe(sl2, sl2.weight([2]), (-1,), 3)
    assert probe.dims == [1, 2, 3, 3]
    assert probe.locally_finite
    assert probe.agrees


def test_finiteness_raising_generator(sl2):
    probe = locally_finite_probe(sl2, sl2.weight([-2]), (1,), 3)
    assert probe.dims == [1, 1, 1, 1]
    assert probe.locally_finite


def test_finiteness_undetermined_when_window_too_shallow(sl2):
    probe = locally_finite_probe(sl2, sl2.weight([-2]), (-1,), 3, depth=2)
    assert probe.dims == [1, 2, 3]
    assert probe.locally_finite is None
    assert probe.agrees is None
    assert probe.verdict == "undetermined within window"


def test_finiteness_shallow_window_still_sees_vanishing(sl2):
    probe = locally_finite_probe(sl2, sl2.weight([0]), (-1,), 3, depth=2)
    assert probe.dims == [1, 1, 1]
    assert probe.locally_finite


def test_finiteness_order_follows_pairing(a2):
    assert finiteness_order(a2, a2.weight([3, 0]), (1, 0)) == 4
    assert finiteness_order(a2, a2.weight([3, -5]), (1, 1)) == 3
    assert finiteness_order(a2, a2.weight([0, 0]), (0, 1)) == 1


def test_finiteness_raises_small_n_to_pairing(a2):
    probe = locally_finite_probe(a2, a2.weight([3, 0]), (-1, 0), 2)
    assert probe.N == 4
    assert probe.dims == [1, 2, 3, 4, 4]
    assert probe.locally_finite
    assert probe.agrees


def test_finiteness_outside_levi_with_positive_pairing(a2):
    # <lambda, (alpha1 + alpha2)^vee> = 2 but alpha2 is not in I(lambda)
    probe = locally_finite_probe(a2, a2.weight([3, -1]), (-1, -1))
    assert probe.dims == [1, 2, 3, 4]
    assert not probe.locally_finite
    assert not probe.predicted


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_finiteness_matches_parabolic_for_random_weights(label):
    rs = root_system(label)
    rng = random.Random(2024)
    simple = set(rs.simple_roots)
    for _ in range(50):
        weight = rs.weight([rng.randint(-3, 3) for _ in range(rs.rank)])
        for gamma in rs.positive_roots:
            for root in (gamma, tuple(-c for c in gamma)):
                probe = locally_finite_probe(rs, weight, root, depth=8)
                assert probe.agrees is not False, (weight, root, probe.dims)
                if gamma in simple:
                    assert probe.locally_finite is not None


def test_injectivity_outside_levi(sl2):
    report = injectivity_probe(sl2, sl2.weight([-2]), (1,), 4)
    assert report.hypothesis_holds
    assert report.injective
    assert report.first_failure is None


def test_injectivity_fails_inside_levi(sl2):
    report = injectivity_probe(sl2, sl2.weight([2]), (1,), 4)
    assert not report.hypothesis_holds
    assert not report.injective
    assert report.first_failure == (2,)


@pytest.mark.parametrize("n", [1, 2])
def test_relation_coefficient_audit(a2, n):
    audit = relation_coefficient_audit(a2, a2.weight([1, -3]), (1, 1), n, p=5)
    assert audit.verdict
    assert audit.witness["degree"] == n
    assert audit.to_json()["p"] == 5


def test_relation_audit_rejects_levi_root(a2):
    with pytest.raises(WeightError):
        relation_coefficient_audit(a2, a2.weight([1, -3]), (1, 0), 1, p=5)


def test_ladder_coefficients():
    a2 = root_system("A2")
    assert abs(ladder_coefficient(a2, (1, 0), (1, 1), 1)) == 1
    g2 = root_system("G2")
    assert abs(ladder_coefficient(g2, (1, 0), (3, 1), 3)) == 1
    assert ladder_coefficient(g2, (1, 0), (3, 1), 4) is None


def test_lemma_pairs(a2):
    assert lemma_pairs(a2) == [((1, 0), (1, 1)), ((0, 1), (1, 1))]


@pytest.mark.parametrize("weight", [[0, 0], [2, -1]])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_power_commutator(a2, weight, n):
    for beta, gamma in lemma_pairs(a2):
        assert power_commutator_check(a2, a2.weight(weight), beta, gamma, n)


@pytest.mark.parametrize("gamma", [(1, 0), (1, 1)])
def test_height_one(a2, gamma):
    assert height_one_check(a2, a2.weight([2, 1]), gamma, 3)


@pytest.mark.parametrize("label", ["A2", "B2", "A3", "B3", "C3"])
@pytest.mark.parametrize("n", [2, 3])
def test_decompositions_hold_outside_g2(label, n):
    rs = root_system(label)
    for gamma in rs.positive_roots:
        assert decomposition_enumerate(rs, gamma, n).holds


@pytest.mark.parametrize("m", [-3, 0, 2, 5])
def test_height_one_sl2(sl2, m):
    for n in range(1, 7):
        assert height_one_check(sl2, sl2.weight([m]), (1,), n)


def test_injectivity_a2_outside_levi(a2):
    report = injectivity_probe(a2, a2.weight([1, -3]), (0, 1), 4)
    assert report.hypothesis_holds
    assert report.injective


def _audit_instances():
    instances = []
    for label, weight in [("A2", [1, -3]), ("A2", [-2, -1]), ("B2", [1, -2]), ("B2", [-1, -3])]:
        rs = root_system(label)
        levi = max_parabolic_for(rs, rs.weight(weight)).indices
        for gamma in rs.positive_roots:
            if not rs.support(gamma) <= levi:
                for n in (1, 2, 3):
                    if n * sum(gamma) <= 6:
                        instances.append((label, weight, gamma, n))
    return instances


@pytest.mark.parametrize("label, weight, gamma, n", _audit_instances())
def test_relation_audit_rank_two(label, weight, gamma, n):
    rs = root_system(label)
    audit = relation_coefficient_audit(rs, rs.weight(weight), gamma, n, p=5)
    assert audit.warnings == []
    assert audit.verdict
    assert audit.counter_witness is None


def test_relation_audit_instance_count():
    instances = _audit_instances()
    assert len(instances) >= 10
    assert {label for label, _, _, _ in instances} == {"A2", "B2"}


@pytest.mark.parametrize("label, weight", [("A2", [1, -3]), ("B2", [1, -2])])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_relation_audit_height_one_forces_unit_coefficient(label, weight, n):
    rs = root_system(label)
    gamma = rs.simple_roots[1]
    audit = relation_coefficient_audit(rs, rs.weight(weight), gamma, n, p=5)
    assert audit.solution_space_dim == 0
    assert len(audit.basis) == 1
    expected = [0] * len(rs.positive_roots)
    expected[rs.index(gamma)] = n
    assert audit.witness == {"nu": expected, "coefficient": "1", "degree": n}
    assert height_one_check(rs, rs.weight(weight), gamma, n)
