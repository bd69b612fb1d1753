import pytest

from category_o.errors import BoundExceededError, ParabolicError, WeightError
from category_o.roots import root_system
from category_o.weyl import (
    ParabolicSubset,
    WeylGroup,
    dot_action,
    generate_weyl,
    in_category_o_p,
    is_integral,
    linkage_class,
    max_parabolic_for,
    min_coset_reps,
    w_family,
    weyl_group,
)


@pytest.mark.parametrize("label, order", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48)])
def test_weyl_group_orders(label, order):
    assert len(generate_weyl(root_system(label))) == order


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "C3"])
def test_length_equals_inversions(label):
    for w in generate_weyl(root_system(label)):
        assert w.length == w.inversions()


def test_words_are_ordered_by_length_then_lex():
    elements = generate_weyl(root_system("A2"))
    assert [w.word for w in elements] == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]


def test_large_groups_refused():
    with pytest.raises(BoundExceededError):
        WeylGroup(root_system("E7"))
    with pytest.raises(BoundExceededError):
        WeylGroup(root_system("A4"), bound=100)


def test_dot_action():
    a2 = root_system("A2")
    group = weyl_group(a2)
    zero = a2.zero_weight()
    assert dot_action(group.element([]), a2.weight([3, -1])) == a2.weight([3, -1])
    assert dot_action(group.element([1]), zero) == a2.weight([-2, 1])
    assert dot_action(group.longest, zero) == a2.weight([-2, -2])


def test_dot_action_gl():
    gl2 = root_system("GL2")
    assert dot_action(w_family(gl2, 1), gl2.zero_weight()) == gl2.weight([-1, 1])
    gl4 = root_system("GL4")
    chi = gl4.weight([5, 1, 2, 3])
    # w_i . chi = (chi_1 - 1, ..., chi_i - 1, chi_0 + i, chi_{i+1}, ...)
    assert dot_action(w_family(gl4, 2), chi) == gl4.weight([0, 1, 7, 3])


def test_w_family_needs_gl():
    with pytest.raises(WeightError):
        w_family(root_system("A2"), 1)


def test_min_coset_reps():
    a2 = root_system("A2")
    cosets = min_coset_reps(a2, ParabolicSubset.of([1], 2))
    assert [w.length for w in cosets.reps] == [0, 1, 2]
    assert len(min_coset_reps(a2, ParabolicSubset.borel(2)).reps) == 6
    assert len(min_coset_reps(root_system("A3"), ParabolicSubset.of([1, 3], 3)).reps) == 6
    assert len(min_coset_reps(a2, ParabolicSubset.full(2)).reps) == 1


@pytest.mark.parametrize("label, indices", [("A2", [1]), ("B2", [2]), ("A3", [2]), ("B3", [1, 3])])
def test_coset_reps_send_dominant_to_levi_dominant(label, indices):
    rs = root_system(label)
    parabolic = ParabolicSubset.of(indices, rs.rank)
    lam = rs.weight([1] * rs.rank)
    for w in min_coset_reps(rs, parabolic).reps:
        assert rs.is_dominant(dot_action(w, lam), parabolic.indices)


def test_max_parabolic_for():
    a1 = root_system("A1")
    assert max_parabolic_for(a1, a1.weight([-2])).is_borel
    a2 = root_system("A2")
    assert max_parabolic_for(a2, a2.weight([2, 0])).is_full
    gl3 = root_system("GL3")
    stabilizer = max_parabolic_for(gl3, gl3.weight([-1, 2, 0]))
    assert stabilizer.to_json() == [2]
    assert stabilizer.blocks == (1, 2)
    with pytest.raises(WeightError):
        max_parabolic_for(a2, a2.weight(["1/2", 0]))


def test_category_membership():
    a2 = root_system("A2")
    lam = a2.weight([1, -3])
    assert is_integral(a2, lam)
    assert in_category_o_p(a2, lam, ParabolicSubset.of([1], 2))
    assert not in_category_o_p(a2, lam, ParabolicSubset.of([2], 2))
    assert not in_category_o_p(a2, a2.weight(["1/2", 0]), ParabolicSubset.borel(2))


def test_linkage_class():
    a2 = root_system("A2")
    entries = linkage_class(a2, a2.zero_weight())
    assert len(entries) == 6
    drops = {tuple(int(c) for c in e.drop) for e in entries}
    assert (0, 0) in drops and (2, 2) in drops
    # singular weight: -rho is fixed by the dot action
    assert len(linkage_class(a2, a2.weight([-1, -1]))) == 1


def test_parabolic_subsets():
    assert ParabolicSubset.parse("", 3).is_borel
    assert ParabolicSubset.parse("1, 3", 3).to_json() == [1, 3]
    assert ParabolicSubset.from_blocks((1, 2)) == ParabolicSubset.of([2], 2)
    assert ParabolicSubset.from_blocks((2, 1, 1)).blocks == (2, 1, 1)
    assert ParabolicSubset.of([1], 2) < ParabolicSubset.full(2)
    assert ParabolicSubset.full(2).label() == "G"
    assert ParabolicSubset.borel(2).label() == "B"
    assert ParabolicSubset.of([2], 2).label(gl=True) == "P(1,2)"
    with pytest.raises(ParabolicError):
        ParabolicSubset.parse("4", 3)
    with pytest.raises(ParabolicError):
        ParabolicSubset.parse("x", 3)


def test_coset_frame_lists_dot_weights():
    a2 = root_system("A2")
    frame = min_coset_reps(a2, ParabolicSubset.of([1], 2)).to_frame(a2.zero_weight())
    assert list(frame.columns) == ["word", "length", "dot_weight"]
    assert frame["word"].tolist()[0] == "e"


@pytest.mark.parametrize("label, weight", [("A2", [3, -1]), ("B2", [-2, 5]), ("G2", [1, -4]), ("GL3", [4, 0, -2])])
def test_dot_action_is_a_group_action(label, weight):
    rs = root_system(label)
    group = weyl_group(rs)
    chi = rs.weight(weight)
    for w in group.elements:
        for v in group.elements:
            assert dot_action(w, dot_action(v, chi)) == dot_action(group.multiply(w, v), chi)
