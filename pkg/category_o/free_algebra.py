"""
Free associative algebra over Q on a finite alphabet.

Used to check the expansion of x^k z_1 ... z_n through iterated brackets
[x^(i), z] = ad(x)^i (z).
"""

import logging
import random
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, List, Optional, Tuple

from category_o_settings import get_toolkit_config

from .errors import BoundExceededError

logger = logging.getLogger(__name__)

Word = Tuple[str, ...]


# keys are words (tuples of letters); values are nonzero Fractions
class FreeAlgebraElement(dict):
    @classmethod
    def letter(cls, name: str, coefficient=1) -> "FreeAlgebraElement":
        return cls({(name,): Fraction(coefficient)})

    @classmethod
    def one(cls) -> "FreeAlgebraElement":
        return cls({(): Fraction(1)})

    def _clean(self) -> "FreeAlgebraElement":
        for key in [k for k, v in self.items() if v == 0]:
            del self[key]
        return self

    def __add__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        out = FreeAlgebraElement(self)
        for word, c in other.items():
            out[word] = out.get(word, 0) + c
        return out._clean()

    def __neg__(self) -> "FreeAlgebraElement":
        return FreeAlgebraElement({w: -c for w, c in self.items()})

    def __sub__(self, other: "FreeAlgebraElement") -> "FreeAlgebraElement":
        return self + (-other)

    def __mul__(self, other) -> "FreeAlgebraElement":
        if not isinstance(other, FreeAlgebraElement):
            return FreeAlgebraElement({w: c * Fraction(other) for w, c in self.items()})._clean()
        out = FreeAlgebraElement()
        for w1, c1 in self.items():
            for w2, c2 in other.items():
                word = w1 + w2
                out[word] = out.get(word, 0) + c1 * c2
        return out._clean()

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FreeAlgebraElement":
        out = FreeAlgebraElement.one()
        for _ in range(k):
            out = out * self
        return out

    def canonical(self) -> List[Tuple[Word, Fraction]]:
        return sorted(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        return self.canonical() == other.canonical()

    __hash__ = None

    def __str__(self) -> str:
        if not self:
            return "0"
        return " + ".join(f"{c}*{''.join(w) or '1'}" for w, c in self.canonical())


def bracket(a: FreeAlgebraElement, b: FreeAlgebraElement) -> FreeAlgebraElement:
    return a * b - b * a


def iterated_bracket(x: FreeAlgebraElement, z: FreeAlgebraElement, i: int) -> FreeAlgebraElement:
    """[x^(i), z] = [x, [x, ... [x, z]]] with i brackets."""
    out = z
    for _ in range(i):
        out = bracket(x, out)
    return out


def _compositions(total: int, parts: int) -> Iterable[Tuple[int, ...]]:
    for head in product(range(total + 1), repeat=parts - 1):
        if sum(head) <= total:
            yield head + (total - sum(head),)


def _multinomial(parts: Tuple[int, ...]) -> int:
    value = factorial(sum(parts))
    for p in parts:
        value //= factorial(p)
    return value


def product_expansion(x: FreeAlgebraElement, zs: List[FreeAlgebraElement], k: int) -> FreeAlgebraElement:
    """sum over i_1 + ... + i_{n+1} = k of multinomials [x^(i_1), z_1] ... [x^(i_n), z_n] x^{i_{n+1}}."""
    total = FreeAlgebraElement()
    for parts in _compositions(k, len(zs) + 1):
        term = FreeAlgebraElement.one()
        for z, i in zip(zs, parts):
            term = term * iterated_bracket(x, z, i)
        total = total + term * (x ** parts[-1]) * _multinomial(parts)
    return total


def bracket_expansion(x: FreeAlgebraElement, zs: List[FreeAlgebraElement], k: int) -> FreeAlgebraElement:
    """sum over i_1 + ... + i_n = k of multinomials [x^(i_1), z_1] ... [x^(i_n), z_n]."""
    total = FreeAlgebraElement()
    for parts in _compositions(k, len(zs)):
        term = FreeAlgebraElement.one()
        for z, i in zip(zs, parts):
            term = term * iterated_bracket(x, z, i)
        total = total + term * _multinomial(parts)
    return total


def commutator_expansion_check(k: int, n: int, seed: Optional[int] = None) -> bool:
    """
    Check x^k z_1...z_n and [x^(k), z_1...z_n] against their bracket expansions.

    Args:
        k: Power of x
        n: Number of factors z_i (at least 1)
        seed: When given, the z_i are scaled by random nonzero rationals

    Returns:
        bool: True if both identities hold exactly

    Raises:
        BoundExceededError: If k or n exceed the configured limits
    """
    config = get_toolkit_config()
    if k > config["free_algebra_max_k"] or n > config["free_algebra_max_n"] or n < 1 or k < 0:
        raise BoundExceededError(
            f"Free-algebra check limited to k <= {config['free_algebra_max_k']}, 1 <= n <= {config['free_algebra_max_n']}",
            {"k": k, "n": n},
        )
    rng = random.Random(seed)
    x = FreeAlgebraElement.letter("x")
    zs = []
    for i in range(n):
        scale = Fraction(1)
        if seed is not None:
            scale = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
        zs.append(FreeAlgebraElement.letter(f"z{i + 1}", scale))
    word = FreeAlgebraElement.one()
    for z in zs:
        word = word * z
    first = (x ** k) * word == product_expansion(x, zs, k)
    second = iterated_bracket(x, word, k) == bracket_expansion(x, zs, k)
    logger.debug(f"Commutator expansion k={k}, n={n}: {first}, {second}")
    return first and second
