from fractions import Fraction

import pytest

from category_o.characters import freudenthal_char, kostant_count, window_drops
from category_o.errors import BoundExceededError, WindowTooShallowError
from category_o.roots import root_system
from category_o.verma import (
    PBWMonomial,
    VermaWindow,
    build_window,
    contravariant_gram,
    height_one_coefficient,
    jh_verma_bruteforce,
    simple_weight_dim,
)


@pytest.fixture
def sl2():
    return root_system("A1")


@pytest.mark.parametrize("m", [0, 1, 3, 5])
def test_sl2_gram_entries(sl2, m):
    window = VermaWindow(sl2, sl2.weight([m]), m + 1)
    assert window.gram((0,)) == [[Fraction(1)]]
    if m > 0:
        assert window.gram((1,)) == [[Fraction(m)]]
    assert window.gram((m + 1,)) == [[Fraction(0)]]
    assert window.simple_dim((m + 1,)) == 0
    assert window.simple_dim((m,)) == 1


def test_sl2_singular_vector(sl2):
    window = VermaWindow(sl2, sl2.weight([2]), 3)
    vectors = window.singular_vectors((3,))
    assert len(vectors) == 1
    assert list(vectors[0]) == [(0, 0, 0)]
    assert window.singular_vectors((1,)) == []


def test_antidominant_weight_has_simple_verma(sl2):
    window = VermaWindow(sl2, sl2.weight([-2]), 4)
    for drop in window_drops(1, 4):
        assert window.simple_dim(drop) == 1
        assert window.singular_vectors(drop) == [] or drop == (0,)


def test_basis_sizes_follow_kostant_counts():
    rs = root_system("B2")
    window = VermaWindow(rs, rs.weight([1, 0]), 4)
    for drop in window_drops(2, 4):
        assert len(window.basis(drop)) == kostant_count(rs, drop)


def test_simple_dims_match_freudenthal():
    rs = root_system("A2")
    lam = rs.weight([1, 1])
    window = build_window(rs, lam, 4)
    char = freudenthal_char(rs, lam, 4)
    for drop in window_drops(2, 4):
        assert window.simple_dim(drop) == char[drop]


def test_simple_weight_dim_helper():
    rs = root_system("A2")
    assert simple_weight_dim(rs, rs.weight([1, 1]), (1, 1)) == 2
    assert simple_weight_dim(rs, rs.weight([0, 0]), (1, 0)) == 0


def test_window_depth_is_checked(sl2):
    window = VermaWindow(sl2, sl2.weight([0]), 2)
    with pytest.raises(WindowTooShallowError):
        window.gram((3,))
    with pytest.raises(BoundExceededError):
        VermaWindow(sl2, sl2.weight([0]), 10_000)


def test_raise_and_lower_matrices_compose_to_gram_recursion(sl2):
    window = VermaWindow(sl2, sl2.weight([4]), 3)
    # x y^k v = k (m - k + 1) y^{k-1} v
    lowered = window.lower_matrix(0, (1,))
    raised = window.raise_matrix(0, (2,))
    assert lowered == [[Fraction(1)]]
    assert raised == [[Fraction(2 * (4 - 2 + 1))]]


def test_populated_windows_compare_equal():
    rs = root_system("A2")
    first = build_window(rs, rs.weight([1, 0]), 3)
    second = build_window(rs, rs.weight([1, 0]), 3)
    assert first == second
    assert first != build_window(rs, rs.weight([0, 1]), 3)


def test_pbw_monomial_labels():
    monomial = PBWMonomial.from_indices((0, 0, 2), 3)
    assert monomial.exponents == (2, 0, 1)
    assert monomial.degree == 3
    assert monomial.label() == "y1^2 y3"
    assert PBWMonomial((0, 0, 0)).label() == "1"


def test_height_one_coefficient():
    assert height_one_coefficient(2, 3) == 0
    assert height_one_coefficient(3, 2) == 12
    assert height_one_coefficient(-2, 1) == -2


def test_jh_factors_sl2(sl2):
    factors = jh_verma_bruteforce(sl2, sl2.weight([0]), 1)
    assert [f.weight.coords for f in factors] == [(0,), (-2,)]
    assert [f.multiplicity for f in factors] == [1, 1]


def test_jh_factors_a2_regular():
    rs = root_system("A2")
    factors = jh_verma_bruteforce(rs, rs.weight([0, 0]), 4)
    assert len(factors) == 6
    assert all(f.multiplicity == 1 for f in factors)
    assert factors[0].drop == (0, 0)
    assert factors[-1].drop == (2, 2)


def test_jh_antidominant_single_factor():
    rs = root_system("A2")
    factors = jh_verma_bruteforce(rs, rs.weight([-2, -2]), 2)
    assert len(factors) == 1


def test_jh_needs_deep_enough_window():
    rs = root_system("A2")
    with pytest.raises(WindowTooShallowError):
        jh_verma_bruteforce(rs, rs.weight([0, 0]), 3)


def test_contravariant_gram_a2_adjoint():
    rs = root_system("A2")
    window = VermaWindow(rs, rs.weight([1, 1]), 2)
    gram = contravariant_gram(window, (1, 1))
    assert len(gram) == 2
    assert gram == [list(row) for row in zip(*gram)]
    assert window.simple_dim((1, 1)) == 2


@pytest.mark.parametrize("label, weight", [("B2", [1, -2]), ("G2", [0, 1]), ("A3", [1, 0, -1])])
def test_contravariant_gram_is_symmetric(label, weight):
    rs = root_system(label)
    window = VermaWindow(rs, rs.weight(weight), 4)
    for drop in window_drops(rs.rank, 4):
        gram = contravariant_gram(window, drop)
        assert gram == [list(row) for row in zip(*gram)]
