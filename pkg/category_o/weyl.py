"""
Weyl groups, dot action and standard parabolic subsets.

Elements are canonicalised by their integer action matrix on
fundamental-weight coordinates; the stored reduced word is the
lexicographically smallest one and serves as a witness only.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from category_o_settings import get_toolkit_config

from .errors import BoundExceededError, ParabolicError, WeightError
from .roots import FUNDAMENTAL, GL_TUPLE, Root, RootSystem, Weight

logger = logging.getLogger(__name__)

MatrixKey = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word (1-based simple indices) plus action matrix."""

    word: Tuple[int, ...]
    matrix: MatrixKey
    rs: RootSystem = field(compare=False, repr=False, hash=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, w: Weight) -> Weight:
        """Linear action w(lambda)."""
        self.rs.check_weight(w)
        if w.basis == FUNDAMENTAL:
            coords = tuple(
                sum((Fraction(self.matrix[i][j]) * w.coords[j] for j in range(len(w.coords))), Fraction(0))
                for i in range(len(w.coords))
            )
            return Weight(coords, FUNDAMENTAL)
        result = w
        for k in reversed(self.word):
            result = self.rs.reflect_weight(result, k - 1)
        return result

    def act_root(self, beta: Sequence[int]) -> Root:
        result = tuple(beta)
        for k in reversed(self.word):
            result = self.rs.reflect_root(result, k - 1)
        return result

    def inversions(self) -> int:
        """#{beta > 0 : w(beta) < 0}."""
        return sum(1 for beta in self.rs.positive_roots if not self.rs.is_positive(self.act_root(beta)))

    def word_label(self) -> str:
        return "e" if not self.word else "s" + ".s".join(str(k) for k in self.word)

    def to_json(self) -> Dict:
        return {"word": list(self.word), "length": self.length, "matrix": [list(row) for row in self.matrix]}


def dot_action(w: WeylElement, chi: Weight) -> Weight:
    """w . chi = w(chi + rho) - rho."""
    rho = w.rs.rho
    return w.act(chi + rho) - rho


def weyl_order(rs: RootSystem) -> int:
    family, n = rs.cartan_type.family, rs.rank
    if family == "A":
        return factorial(n + 1)
    if family in ("B", "C"):
        return 2 ** n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(family, n)]


class WeylGroup:
    """Full enumeration of W by increasing length."""

    def __init__(self, rs: RootSystem, bound: Optional[int] = None, allow_large: Optional[bool] = None):
        config = get_toolkit_config()
        bound = config["weyl_bound"] if bound is None else bound
        allow_large = config["allow_large_weyl"] if allow_large is None else allow_large
        order = weyl_order(rs)
        if rs.cartan_type.family == "E" and rs.rank >= 7 and not allow_large:
            raise BoundExceededError(
                f"Weyl group of {rs.cartan_type.name} has order {order}; set CATEGORY_O_ALLOW_LARGE_WEYL to enumerate it",
                {"order": order},
            )
        if order > bound and not allow_large:
            raise BoundExceededError(f"|W| = {order} exceeds the bound {bound}", {"order": order, "bound": bound})

        self.rs = rs
        n = rs.rank
        cartan = rs.cartan_matrix
        # s_k(lambda) = lambda - lambda_k alpha_k, i.e. S = I - alpha_k e_k^T
        self._simple = [np.eye(n, dtype=np.int64) - np.outer(cartan[:, k], np.eye(n, dtype=np.int64)[k]) for k in range(n)]

        identity = np.eye(n, dtype=np.int64)
        start = WeylElement((), self._key(identity), rs)
        self.elements: List[WeylElement] = [start]
        self.by_key: Dict[MatrixKey, WeylElement] = {start.matrix: start}
        layer = [(start, identity)]
        while layer:
            found: Dict[MatrixKey, Tuple[Tuple[int, ...], np.ndarray]] = {}
            for element, matrix in layer:
                for k in range(n):
                    product = self._simple[k] @ matrix
                    key = self._key(product)
                    if key in self.by_key:
                        continue
                    word = (k + 1,) + element.word
                    if key not in found or word < found[key][0]:
                        found[key] = (word, product)
            layer = []
            for key, (word, matrix) in sorted(found.items(), key=lambda item: item[1][0]):
                element = WeylElement(word, key, rs)
                self.by_key[key] = element
                self.elements.append(element)
                layer.append((element, matrix))
        if len(self.elements) != order:
            raise BoundExceededError(f"Enumerated {len(self.elements)} elements, expected {order}")
        logger.debug(f"Enumerated Weyl group of {rs.cartan_type.name}: {len(self.elements)} elements")

    @staticmethod
    def _key(matrix: np.ndarray) -> MatrixKey:
        return tuple(tuple(int(x) for x in row) for row in matrix)

    def element(self, word: Iterable[int]) -> WeylElement:
        """The element with the given (not necessarily reduced) word."""
        matrix = np.eye(self.rs.rank, dtype=np.int64)
        for k in reversed(list(word)):
            matrix = self._simple[k - 1] @ matrix
        return self.by_key[self._key(matrix)]

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        product = np.array(a.matrix, dtype=np.int64) @ np.array(b.matrix, dtype=np.int64)
        return self.by_key[self._key(product)]

    def left_multiply(self, k: int, w: WeylElement) -> WeylElement:
        return self.by_key[self._key(self._simple[k - 1] @ np.array(w.matrix, dtype=np.int64))]

    @property
    def longest(self) -> WeylElement:
        return max(self.elements, key=lambda w: (w.length, w.word))


_GROUPS: Dict[Tuple, WeylGroup] = {}


def weyl_group(rs: RootSystem, bound: Optional[int] = None, allow_large: Optional[bool] = None) -> WeylGroup:
    key = (rs.cartan_type, bound, allow_large)
    if key not in _GROUPS:
        _GROUPS[key] = WeylGroup(rs, bound, allow_large)
    return _GROUPS[key]


def generate_weyl(rs: RootSystem, bound: Optional[int] = None, allow_large: Optional[bool] = None) -> List[WeylElement]:
    """
    Enumerate W once per element, ordered by (length, reduced word).

    Raises:
        BoundExceededError: If |W| exceeds the configured bound or the type is E7/E8
    """
    return list(weyl_group(rs, bound, allow_large).elements)


@dataclass(frozen=True)
class ParabolicSubset:
    """A subset I of the simple roots (1-based), i.e. a standard parabolic p_I."""

    indices: FrozenSet[int]
    rank: int

    def __post_init__(self):
        bad = [k for k in self.indices if not 1 <= k <= self.rank]
        if bad:
            raise ParabolicError(f"Simple indices {sorted(bad)} out of range 1..{self.rank}")

    @classmethod
    def of(cls, indices: Iterable[int], rank: int) -> "ParabolicSubset":
        return cls(frozenset(int(k) for k in indices), rank)

    @classmethod
    def borel(cls, rank: int) -> "ParabolicSubset":
        return cls(frozenset(), rank)

    @classmethod
    def full(cls, rank: int) -> "ParabolicSubset":
        return cls(frozenset(range(1, rank + 1)), rank)

    @classmethod
    def parse(cls, text: Optional[str], rank: int) -> "ParabolicSubset":
        """Comma list of simple-root indices; empty string is the Borel."""
        if text is None or not text.strip():
            return cls.borel(rank)
        try:
            return cls.of([int(p) for p in text.split(",") if p.strip()], rank)
        except ValueError:
            raise ParabolicError(f"Cannot parse parabolic {text!r}")

    @classmethod
    def from_blocks(cls, blocks: Sequence[int]) -> "ParabolicSubset":
        """GL_{d+1} block type (n_1, ..., n_s) -> subset with the block boundaries removed."""
        if any(b < 1 for b in blocks):
            raise ParabolicError(f"Invalid block type {tuple(blocks)}")
        rank = sum(blocks) - 1
        cuts, position = set(), 0
        for b in blocks[:-1]:
            position += b
            cuts.add(position)
        return cls(frozenset(k for k in range(1, rank + 1) if k not in cuts), rank)

    @property
    def blocks(self) -> Tuple[int, ...]:
        """Block type for the GL convention (alpha_k separates positions k-1 and k)."""
        sizes, current = [], 1
        for k in range(1, self.rank + 1):
            if k in self.indices:
                current += 1
            else:
                sizes.append(current)
                current = 1
        sizes.append(current)
        return tuple(sizes)

    def __le__(self, other: "ParabolicSubset") -> bool:
        return self.indices <= other.indices

    def __lt__(self, other: "ParabolicSubset") -> bool:
        return self.indices < other.indices

    @property
    def is_borel(self) -> bool:
        return not self.indices

    @property
    def is_full(self) -> bool:
        return len(self.indices) == self.rank

    def label(self, gl: bool = False) -> str:
        if gl:
            return "P(" + ",".join(str(b) for b in self.blocks) + ")"
        if self.is_full:
            return "G"
        if self.is_borel:
            return "B"
        return "P{" + ",".join(str(k) for k in sorted(self.indices)) + "}"

    def to_json(self) -> List[int]:
        return sorted(self.indices)


@dataclass
class CosetSystem:
    """Minimal length representatives ^I W of W_I \\ W."""

    parabolic: ParabolicSubset
    reps: List[WeylElement]

    @property
    def max_rep(self) -> WeylElement:
        return self.reps[-1]

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "I": self.parabolic.to_json(),
            "reps": [w.to_json() for w in self.reps],
            "max_rep": self.max_rep.to_json(),
        }

    def to_frame(self, weight: Optional[Weight] = None) -> pd.DataFrame:
        rows = []
        for w in self.reps:
            row = {"word": w.word_label(), "length": w.length}
            if weight is not None:
                row["dot_weight"] = str(dot_action(w, weight))
            rows.append(row)
        return pd.DataFrame(rows, columns=["word", "length"] + (["dot_weight"] if weight is not None else []))


def min_coset_reps(rs: RootSystem, parabolic: ParabolicSubset) -> CosetSystem:
    """
    Elements w with l(s_i w) > l(w) for every i in I, by (length, word).

    Args:
        rs: Root system
        parabolic: The subset I

    Returns:
        CosetSystem with |W| / |W_I| representatives
    """
    group = weyl_group(rs)
    reps = [
        w for w in group.elements
        if all(group.left_multiply(k, w).length > w.length for k in parabolic.indices)
    ]
    reps.sort(key=lambda w: (w.length, w.word))
    return CosetSystem(parabolic, reps)


def is_integral(rs: RootSystem, weight: Weight) -> bool:
    return all(p.denominator == 1 for p in rs.simple_pairings(weight))


def max_parabolic_for(rs: RootSystem, weight: Weight) -> ParabolicSubset:
    """
    I(lambda) = {alpha in Delta : <lambda, alpha^vee> in Z_{>=0}}.

    Raises:
        WeightError: If the weight is not integral
    """
    if not is_integral(rs, weight):
        raise WeightError(f"Weight {weight} is not integral")
    pairings = rs.simple_pairings(weight)
    return ParabolicSubset.of([k + 1 for k, p in enumerate(pairings) if p >= 0], rs.rank)


def in_category_o_p(rs: RootSystem, weight: Weight, parabolic: ParabolicSubset) -> bool:
    """Whether L(lambda) lies in the integral parabolic category attached to I."""
    return is_integral(rs, weight) and parabolic <= max_parabolic_for(rs, weight)


@dataclass(frozen=True)
class LinkageEntry:
    element: WeylElement
    weight: Weight
    drop: Optional[Tuple[Fraction, ...]]


def linkage_class(rs: RootSystem, weight: Weight) -> List[LinkageEntry]:
    """
    Distinct dot-translates w . lambda, each with its shortest word and
    simple-root drop lambda - w . lambda (None when not a root-lattice drop).
    """
    seen: Dict[Weight, LinkageEntry] = {}
    for w in generate_weyl(rs):
        image = dot_action(w, weight)
        if image not in seen:
            seen[image] = LinkageEntry(w, image, rs.drop_between(weight, image))
    duplicates = len(generate_weyl(rs)) - len(seen)
    if duplicates:
        logger.debug(f"{weight} is singular: {duplicates} coincident dot-translates")
    return list(seen.values())


def w_family(rs: RootSystem, j: int) -> WeylElement:
    """w_j = s_j ... s_1 for GL_{d+1}, 0 <= j <= d."""
    if rs.weight_basis != GL_TUPLE:
        raise WeightError("The w_j family is defined for the GL convention only")
    if not 0 <= j <= rs.rank:
        raise WeightError(f"w_{j} needs 0 <= j <= {rs.rank}")
    return weyl_group(rs).element(range(j, 0, -1))
