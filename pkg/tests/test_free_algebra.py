import pytest

from category_o.errors import BoundExceededError
from category_o.free_algebra import FreeAlgebraElement, bracket, commutator_expansion_check, iterated_bracket


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_commutator_expansion(k, n):
    assert commutator_expansion_check(k, n)


def test_commutator_expansion_with_scaled_letters():
    assert commutator_expansion_check(3, 2, seed=7)


def test_limits_are_enforced():
    with pytest.raises(BoundExceededError):
        commutator_expansion_check(5, 1)
    with pytest.raises(BoundExceededError):
        commutator_expansion_check(1, 0)
    with pytest.raises(BoundExceededError):
        commutator_expansion_check(1, 5)


def test_bracket_basics():
    x = FreeAlgebraElement.letter("x")
    y = FreeAlgebraElement.letter("y")
    assert bracket(x, x) == FreeAlgebraElement()
    assert bracket(x, y) == x * y - y * x
    assert iterated_bracket(x, y, 0) == y
    assert iterated_bracket(x, y, 2) == x * x * y - x * y * x * 2 + y * x * x


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_commutator_expansion_four_factors_scaled(seed):
    assert commutator_expansion_check(4, 4, seed=seed)
