import pytest

from category_o.characters import (
    freudenthal_char,
    kostant_alternating_char,
    kostant_count,
    parabolic_verma_char,
    verma_char,
    window_drops,
    weyl_dim,
)
from category_o.errors import WeightError
from category_o.roots import root_system
from category_o.weyl import ParabolicSubset


def test_window_drops_order():
    assert window_drops(2, 2) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_kostant_counts():
    a2 = root_system("A2")
    assert kostant_count(a2, (0, 0)) == 1
    assert kostant_count(a2, (1, 1)) == 2
    assert kostant_count(a2, (2, 2)) == 3
    assert kostant_count(a2, (-1, 1)) == 0
    a1 = root_system("A1")
    assert all(kostant_count(a1, (n,)) == 1 for n in range(8))


@pytest.mark.parametrize(
    "label, weight, dim",
    [("A1", [0], 1), ("A1", [5], 6), ("A2", [1, 1], 8), ("A2", [2, 0], 6), ("B2", [1, 0], 5), ("B2", [0, 1], 4), ("G2", [1, 0], 7), ("G2", [0, 1], 14)],
)
def test_weyl_dimension(label, weight, dim):
    rs = root_system(label)
    assert weyl_dim(rs, rs.weight(weight)) == dim


def test_weyl_dimension_needs_dominant_weight():
    rs = root_system("A2")
    with pytest.raises(WeightError):
        weyl_dim(rs, rs.weight([-1, 0]))


def test_freudenthal_adjoint_a2():
    rs = root_system("A2")
    char = freudenthal_char(rs, rs.rho, 4)
    assert char.total() == 8
    assert char[(1, 1)] == 2
    assert char[(1, 0)] == 1
    assert char[(2, 0)] == 0


@pytest.mark.parametrize("label, weight, depth", [("B2", [1, 0], 4), ("G2", [1, 0], 6), ("C3", [0, 1, 0], 8)])
def test_freudenthal_total_matches_weyl_dimension(label, weight, depth):
    rs = root_system(label)
    lam = rs.weight(weight)
    assert freudenthal_char(rs, lam, depth).total() == weyl_dim(rs, lam)


@pytest.mark.parametrize("label, weight", [("A2", [1, 1]), ("A2", [2, 1]), ("B2", [1, 1])])
def test_freudenthal_matches_alternating_sum(label, weight):
    rs = root_system(label)
    lam = rs.weight(weight)
    assert freudenthal_char(rs, lam, 5).dims == kostant_alternating_char(rs, lam, 5).dims


def test_parabolic_verma_characters():
    rs = root_system("A2")
    zero = rs.zero_weight()
    assert parabolic_verma_char(rs, ParabolicSubset.borel(2), zero, 4).dims == verma_char(rs, zero, 4).dims
    lam = rs.weight([1, 1])
    assert parabolic_verma_char(rs, ParabolicSubset.full(2), lam, 4).dims == freudenthal_char(rs, lam, 4).dims
    levi = parabolic_verma_char(rs, ParabolicSubset.of([1], 2), zero, 3)
    assert levi[(0, 1)] == 1
    assert levi[(1, 0)] == 0


def test_levi_freudenthal_needs_levi_dominance():
    rs = root_system("A2")
    with pytest.raises(WeightError):
        freudenthal_char(rs, rs.weight([-1, 2]), 2, ParabolicSubset.of([1], 2))


def test_character_window_frame():
    rs = root_system("A1")
    frame = verma_char(rs, rs.weight([0]), 3).to_frame()
    assert list(frame.columns) == ["drop", "height", "dim"]
    assert frame["dim"].tolist() == [1, 1, 1, 1]
