"""
Character windows: Kostant partition counts, Weyl dimension, Freudenthal
multiplicities (also for a Levi factor) and parabolic Verma characters.

All characters are indexed by the drop delta in Z_{>=0}Delta, i.e. the
weight lambda - delta, and truncated at height D.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from .errors import WeightError
from .roots import Drop, Root, RootSystem, Weight
from .weyl import ParabolicSubset, dot_action, generate_weyl

logger = logging.getLogger(__name__)


def window_drops(rank: int, depth: int) -> List[Drop]:
    """Every drop of height <= depth, ordered by height then descending coordinates."""
    drops = [d for d in product(range(depth + 1), repeat=rank) if sum(d) <= depth]
    return sorted(drops, key=lambda d: (sum(d), tuple(-c for c in d)))


@lru_cache(maxsize=None)
def _partitions(roots: Tuple[Root, ...], drop: Drop) -> int:
    if not roots:
        return 1 if not any(drop) else 0
    first, rest = roots[0], roots[1:]
    total, current = 0, drop
    while all(c >= 0 for c in current):
        total += _partitions(rest, current)
        current = tuple(c - b for c, b in zip(current, first))
    return total


def kostant_count(rs: RootSystem, drop: Sequence[int], roots: Optional[Iterable[Root]] = None) -> int:
    """
    Number of ways to write drop as a Z_{>=0}-combination of positive roots.

    Args:
        rs: Root system
        drop: Simple-root coordinates
        roots: Restrict to these positive roots (default: all of them)

    Returns:
        int: the partition count (0 for drops with a negative coordinate)
    """
    drop = tuple(int(c) for c in drop)
    if any(c < 0 for c in drop):
        return 0
    chosen = tuple(rs.positive_roots if roots is None else roots)
    return _partitions(chosen, drop)


@dataclass
class CharacterWindow:
    """Weight multiplicities of a highest-weight module at drops of height <= depth."""

    base: Weight
    depth: int
    dims: Dict[Drop, int] = field(default_factory=dict)

    def __getitem__(self, drop: Sequence[int]) -> int:
        return self.dims.get(tuple(int(c) for c in drop), 0)

    def total(self) -> int:
        return sum(self.dims.values())

    def support(self) -> List[Drop]:
        return [d for d, m in self.dims.items() if m]

    def to_json(self) -> Dict:
        return {
            "base": self.base.to_json(),
            "depth": self.depth,
            "dims": [[list(d), m] for d, m in sorted(self.dims.items(), key=lambda item: (sum(item[0]), item[0])) if m],
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [{"drop": str(list(d)), "height": sum(d), "dim": m} for d, m in self.dims.items() if m]
        return pd.DataFrame(rows, columns=["drop", "height", "dim"])


def verma_char(rs: RootSystem, weight: Weight, depth: int) -> CharacterWindow:
    return CharacterWindow(weight, depth, {d: kostant_count(rs, d) for d in window_drops(rs.rank, depth)})


def weyl_dim(rs: RootSystem, weight: Weight) -> int:
    """
    prod_{beta > 0} <lambda + rho, beta^vee> / <rho, beta^vee>.

    Raises:
        WeightError: If lambda is not dominant integral
    """
    if not rs.is_dominant(weight):
        raise WeightError(f"Weyl dimension needs a dominant integral weight, got {weight}")
    shifted = weight + rs.rho
    value = Fraction(1)
    for beta in rs.positive_roots:
        value *= rs.coroot_pairing(shifted, beta) / rs.coroot_pairing(rs.rho, beta)
    return int(value)


def _half_norms(rs: RootSystem) -> List[Fraction]:
    return [rs.inner_form[k][k] / 2 for k in range(rs.rank)]


def freudenthal_char(
    rs: RootSystem, weight: Weight, depth: int, parabolic: Optional[ParabolicSubset] = None
) -> CharacterWindow:
    """
    Freudenthal recursion for V(lambda), or for the Levi module V_I(lambda) when
    a parabolic is given (drops outside the span of I have multiplicity 0).

    Raises:
        WeightError: If lambda is not (L_I-)dominant integral
    """
    subset = sorted(parabolic.indices) if parabolic is not None else list(range(1, rs.rank + 1))
    if not rs.is_dominant(weight, subset):
        raise WeightError(f"{weight} is not dominant for the Levi of {subset}")
    chosen = set(subset)
    roots = rs.roots_of_subset(chosen)
    pairings = rs.simple_pairings(weight)
    half = _half_norms(rs)
    # (lambda, alpha_j) and (lambda + rho_I, alpha_j)
    lam = [pairings[j] * half[j] for j in range(rs.rank)]
    lam_rho = [(pairings[j] + 1) * half[j] for j in range(rs.rank)]

    def lam_dot(vector):
        return sum((Fraction(vector[j]) * lam[j] for j in range(rs.rank)), Fraction(0))

    dims: Dict[Drop, int] = {}
    for drop in window_drops(rs.rank, depth):
        if not any(drop):
            dims[drop] = 1
            continue
        if any(c and (j + 1) not in chosen for j, c in enumerate(drop)):
            dims[drop] = 0
            continue
        denominator = 2 * sum((drop[j] * lam_rho[j] for j in range(rs.rank)), Fraction(0)) - rs.norm2(drop)
        numerator = Fraction(0)
        for beta in roots:
            k = 1
            while True:
                higher = tuple(c - k * b for c, b in zip(drop, beta))
                if any(c < 0 for c in higher):
                    break
                m = dims.get(higher, 0)
                if m:
                    numerator += m * (lam_dot(beta) - rs.inner(higher, beta))
                k += 1
        numerator *= 2
        if denominator == 0:
            dims[drop] = 0
            continue
        value = numerator / denominator
        if value.denominator != 1 or value < 0:
            raise WeightError(f"Freudenthal produced {value} at drop {drop}")
        dims[drop] = int(value)
    return CharacterWindow(weight, depth, dims)


def dot_drops(rs: RootSystem, weight: Weight) -> List[Tuple[int, Drop]]:
    """(length of w, drop lambda - w.lambda) for every w in W."""
    out = []
    for w in generate_weyl(rs):
        drop = rs.drop_between(weight, dot_action(w, weight))
        out.append((w.length, tuple(int(c) for c in drop)))
    return out


def kostant_alternating_char(rs: RootSystem, weight: Weight, depth: int) -> CharacterWindow:
    """sum_w (-1)^{l(w)} P(w.lambda - mu) for dominant lambda."""
    if not rs.is_dominant(weight):
        raise WeightError(f"The alternating sum needs a dominant weight, got {weight}")
    terms = dot_drops(rs, weight)
    dims = {}
    for drop in window_drops(rs.rank, depth):
        dims[drop] = sum(
            (-1) ** length * kostant_count(rs, tuple(c - s for c, s in zip(drop, shift)))
            for length, shift in terms
        )
    return CharacterWindow(weight, depth, dims)


def parabolic_verma_char(rs: RootSystem, parabolic: ParabolicSubset, weight: Weight, depth: int) -> CharacterWindow:
    """
    char M_I(lambda) = char V_I(lambda) * prod_{beta in Phi+ \\ Phi_I+} (1 - e^{-beta})^{-1}.

    Raises:
        WeightError: If lambda is not L_I-dominant integral
    """
    levi = freudenthal_char(rs, weight, depth, parabolic)
    levi_roots = set(rs.roots_of_subset(parabolic.indices))
    nilradical = [b for b in rs.positive_roots if b not in levi_roots]
    dims = {}
    for drop in window_drops(rs.rank, depth):
        total = 0
        for inner_drop, m in levi.dims.items():
            if m:
                rest = tuple(c - i for c, i in zip(drop, inner_drop))
                total += m * kostant_count(rs, rest, nilradical)
        dims[drop] = total
    logger.debug(f"Parabolic Verma character for I={sorted(parabolic.indices)} at depth {depth}")
    return CharacterWindow(weight, depth, dims)
