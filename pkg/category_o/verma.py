"""
Truncated Verma modules.

A window keeps the PBW basis y_{j1} y_{j2} ... y_{jk} v+ (j1 <= j2 <= ... in the
positive-root order: by height, then lexicographically with the larger
coordinate first, so (1, 0) precedes (0, 1)) of every weight space down to
height D, the action of the Chevalley generators between them, and the
contravariant Gram matrices whose ranks are the weight multiplicities of the
simple quotient L(lambda).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from category_o_settings import get_toolkit_config

from . import linalg
from .characters import kostant_count, window_drops
from .errors import BoundExceededError, ConsistencyError, WindowTooShallowError
from .roots import Drop, Root, RootSystem, Weight
from .weyl import is_integral, linkage_class

logger = logging.getLogger(__name__)

ORDERING_TAG = "height_then_descending_coordinates"

Monomial = Tuple[int, ...]
Vector = Dict[Monomial, Fraction]


@dataclass(frozen=True)
class PBWMonomial:
    """Exponents nu_beta over the positive roots, in PBW order."""

    exponents: Tuple[int, ...]

    @classmethod
    def from_indices(cls, indices: Monomial, size: int) -> "PBWMonomial":
        exponents = [0] * size
        for j in indices:
            exponents[j] += 1
        return cls(tuple(exponents))

    @property
    def indices(self) -> Monomial:
        return tuple(j for j, e in enumerate(self.exponents) for _ in range(e))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def drop(self, rs: RootSystem) -> Drop:
        total = [0] * rs.rank
        for j, e in enumerate(self.exponents):
            for k, c in enumerate(rs.positive_roots[j]):
                total[k] += e * c
        return tuple(total)

    def label(self) -> str:
        parts = [f"y{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(self.exponents) if e]
        return " ".join(parts) if parts else "1"


def _add_into(target: Vector, source: Vector, scale: Fraction = Fraction(1)):
    for key, value in source.items():
        new = target.get(key, 0) + scale * value
        if new:
            target[key] = new
        else:
            target.pop(key, None)


class VermaWindow:
    """
    M(lambda) truncated at height depth.

    Gram matrices are computed lazily and memoised per drop; build_window
    fills every level eagerly together with the action tables.
    """

    def __init__(self, rs: RootSystem, weight: Weight, depth: int):
        max_depth = get_toolkit_config()["max_depth"]
        if depth < 0 or depth > max_depth:
            raise BoundExceededError(f"Window depth {depth} outside 0..{max_depth}", {"depth": depth})
        rs.check_weight(weight)
        self.rs = rs
        self.weight = weight
        self.depth = depth
        self.roots: List[Root] = rs.positive_roots
        self.chevalley = rs.chevalley
        self._pairings = {beta: rs.coroot_pairing(weight, beta) for beta in self.roots}
        self._bases: Dict[Drop, List[Monomial]] = {}
        self._positions: Dict[Drop, Dict[Monomial, int]] = {}
        self._lower_memo: Dict[Tuple[int, Monomial], Vector] = {}
        self._raise_memo: Dict[Tuple[int, Monomial], Vector] = {}
        self.grams: Dict[Drop, List[List[Fraction]]] = {}
        self.raising: Dict[Tuple[int, Drop], List[List[Fraction]]] = {}
        self.lowering: Dict[Tuple[int, Drop], List[List[Fraction]]] = {}

    # -- bases -------------------------------------------------------------

    def check_drop(self, drop: Sequence[int]) -> Drop:
        drop = tuple(int(c) for c in drop)
        if len(drop) != self.rs.rank or any(c < 0 for c in drop):
            raise WindowTooShallowError(f"{drop} is not a drop of rank {self.rs.rank}")
        if sum(drop) > self.depth:
            raise WindowTooShallowError(
                f"Drop {drop} of height {sum(drop)} lies below the window depth {self.depth}",
                {"drop": list(drop), "depth": self.depth},
            )
        return drop

    def basis(self, drop: Sequence[int]) -> List[Monomial]:
        drop = self.check_drop(drop)
        if drop not in self._bases:
            out: List[Monomial] = []

            def extend(start, remaining, prefix):
                if not any(remaining):
                    out.append(tuple(prefix))
                    return
                for j in range(start, len(self.roots)):
                    rest = tuple(c - b for c, b in zip(remaining, self.roots[j]))
                    if all(c >= 0 for c in rest):
                        extend(j, rest, prefix + [j])

            extend(0, drop, [])
            self._bases[drop] = out
            self._positions[drop] = {m: k for k, m in enumerate(out)}
        return self._bases[drop]

    def pbw_basis(self, drop: Sequence[int]) -> List[PBWMonomial]:
        return [PBWMonomial.from_indices(m, len(self.roots)) for m in self.basis(drop)]

    def position(self, drop: Drop, monomial: Monomial) -> int:
        self.basis(drop)
        return self._positions[drop][monomial]

    def monomial_drop(self, monomial: Monomial) -> Drop:
        total = [0] * self.rs.rank
        for j in monomial:
            for k, c in enumerate(self.roots[j]):
                total[k] += c
        return tuple(total)

    # -- action ------------------------------------------------------------

    def lower(self, j: int, monomial: Monomial) -> Vector:
        """y_{beta_j} . (monomial v+) in normal form."""
        key = (j, monomial)
        if key in self._lower_memo:
            return self._lower_memo[key]
        if not monomial or j <= monomial[0]:
            result = {(j,) + monomial: Fraction(1)}
        else:
            first, rest = monomial[0], monomial[1:]
            result: Vector = {}
            for term, coeff in self.lower(j, rest).items():
                _add_into(result, self.lower(first, term), coeff)
            # [y_j, y_first] = N(-beta_j, -beta_first) y_{beta_j + beta_first}
            beta, gamma = self.roots[j], self.roots[first]
            total = tuple(a + b for a, b in zip(beta, gamma))
            if self.rs.is_positive(total):
                n = self.chevalley.N(tuple(-a for a in beta), tuple(-b for b in gamma))
                _add_into(result, self.lower(self.rs.index(total), rest), Fraction(n))
        self._lower_memo[key] = result
        return result

    def raise_root(self, alpha_index: int, monomial: Monomial) -> Vector:
        """x_{beta} . (monomial v+) in normal form, beta the positive root at alpha_index."""
        key = (alpha_index, monomial)
        if key in self._raise_memo:
            return self._raise_memo[key]
        result: Vector = {}
        if monomial:
            alpha = self.roots[alpha_index]
            j, rest = monomial[0], monomial[1:]
            for term, coeff in self.raise_root(alpha_index, rest).items():
                _add_into(result, self.lower(j, term), coeff)
            beta = self.roots[j]
            if alpha == beta:
                scalar = self._pairings[alpha] - self.rs.root_pairing(self.monomial_drop(rest), alpha)
                if scalar:
                    _add_into(result, {rest: Fraction(1)}, scalar)
            else:
                diff = tuple(a - b for a, b in zip(alpha, beta))
                if self.rs.is_root(diff):
                    n = self.chevalley.N(alpha, tuple(-b for b in beta))
                    if self.rs.is_positive(diff):
                        _add_into(result, self.raise_root(self.rs.index(diff), rest), Fraction(n))
                    else:
                        lowered = self.lower(self.rs.index(tuple(-c for c in diff)), rest)
                        _add_into(result, lowered, Fraction(n))
        self._raise_memo[key] = result
        return result

    def apply_lower(self, j: int, vector: Vector) -> Vector:
        out: Vector = {}
        for m, c in vector.items():
            _add_into(out, self.lower(j, m), c)
        return out

    def apply_raise(self, alpha_index: int, vector: Vector) -> Vector:
        out: Vector = {}
        for m, c in vector.items():
            _add_into(out, self.raise_root(alpha_index, m), c)
        return out

    def raise_matrix(self, alpha_index: int, drop: Sequence[int]) -> List[List[Fraction]]:
        """Matrix of x_beta from the drop weight space to drop - beta (rows: target basis)."""
        drop = self.check_drop(drop)
        source = self.basis(drop)
        target_drop = tuple(c - b for c, b in zip(drop, self.roots[alpha_index]))
        if any(c < 0 for c in target_drop):
            return []
        target = self.basis(target_drop)
        matrix = [[Fraction(0)] * len(source) for _ in target]
        for col, m in enumerate(source):
            for t, c in self.raise_root(alpha_index, m).items():
                matrix[self._positions[target_drop][t]][col] = c
        return matrix

    def lower_matrix(self, j: int, drop: Sequence[int]) -> List[List[Fraction]]:
        drop = self.check_drop(drop)
        source = self.basis(drop)
        target_drop = self.check_drop(tuple(c + b for c, b in zip(drop, self.roots[j])))
        target = self.basis(target_drop)
        matrix = [[Fraction(0)] * len(source) for _ in target]
        for col, m in enumerate(source):
            for t, c in self.lower(j, m).items():
                matrix[self._positions[target_drop][t]][col] = c
        return matrix

    # -- contravariant form --------------------------------------------------

    def gram(self, drop: Sequence[int]) -> List[List[Fraction]]:
        """<y^nu v, y^tau v> on the weight space lambda - drop."""
        drop = self.check_drop(drop)
        if drop in self.grams:
            return self.grams[drop]
        basis = self.basis(drop)
        if not any(drop):
            matrix = [[Fraction(1)]]
        else:
            matrix = []
            for nu in basis:
                j, rest = nu[0], nu[1:]
                lower_drop = tuple(c - b for c, b in zip(drop, self.roots[j]))
                lower_gram = self.gram(lower_drop)
                row_of_rest = lower_gram[self.position(lower_drop, rest)]
                positions = self._positions[lower_drop]
                row = []
                for tau in basis:
                    value = Fraction(0)
                    for target, coeff in self.raise_root(j, tau).items():
                        value += coeff * row_of_rest[positions[target]]
                    row.append(value)
                matrix.append(row)
        self.grams[drop] = matrix
        return matrix

    def simple_dim(self, drop: Sequence[int]) -> int:
        return linalg.rank(self.gram(drop))

    def singular_vectors(self, drop: Sequence[int]) -> List[Vector]:
        """Basis of the vectors in the weight space killed by every simple x_alpha."""
        drop = self.check_drop(drop)
        basis = self.basis(drop)
        stacked = []
        for k in range(self.rs.rank):
            stacked.extend(self.raise_matrix(self.rs.index(self.rs.simple_roots[k]), drop))
        kernel = linalg.nullspace(stacked, len(basis))
        return [{basis[i]: c for i, c in enumerate(v) if c} for v in kernel]

    def populate(self) -> "VermaWindow":
        for drop in window_drops(self.rs.rank, self.depth):
            self.gram(drop)
            for k in range(self.rs.rank):
                alpha_index = self.rs.index(self.rs.simple_roots[k])
                if drop[k] > 0:
                    self.raising[(alpha_index, drop)] = self.raise_matrix(alpha_index, drop)
            for j, beta in enumerate(self.roots):
                if sum(drop) + sum(beta) <= self.depth:
                    self.lowering[(j, drop)] = self.lower_matrix(j, drop)
        logger.debug(f"Populated window of {self.weight} to depth {self.depth}: {len(self.grams)} weight spaces")
        return self

    # -- serialization -----------------------------------------------------

    def to_json(self) -> Dict:
        def encode(matrix):
            return [[str(x) for x in row] for row in matrix]

        return {
            "cartan_type": self.rs.cartan_type.name,
            "weight": self.weight.to_json(),
            "basis_tag": self.weight.basis,
            "depth": self.depth,
            "ordering": ORDERING_TAG,
            "grams": [[list(d), encode(m)] for d, m in sorted(self.grams.items())],
            "raising": [[a, list(d), encode(m)] for (a, d), m in sorted(self.raising.items())],
            "lowering": [[j, list(d), encode(m)] for (j, d), m in sorted(self.lowering.items())],
        }

    def load_tables(self, payload: Dict):
        def decode(matrix):
            return [[Fraction(x) for x in row] for row in matrix]

        self.grams = {tuple(d): decode(m) for d, m in payload["grams"]}
        self.raising = {(a, tuple(d)): decode(m) for a, d, m in payload["raising"]}
        self.lowering = {(j, tuple(d)): decode(m) for j, d, m in payload["lowering"]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, VermaWindow):
            return NotImplemented
        return (
            self.rs.cartan_type == other.rs.cartan_type
            and self.weight == other.weight
            and self.depth == other.depth
            and self.grams == other.grams
            and self.raising == other.raising
            and self.lowering == other.lowering
        )

    __hash__ = None


def build_window(rs: RootSystem, weight: Weight, depth: int) -> VermaWindow:
    """
    Build a fully populated window of M(lambda).

    Raises:
        BoundExceededError: If depth exceeds the configured maximum
    """
    window = VermaWindow(rs, weight, depth).populate()
    for drop in window.grams:
        if len(window.basis(drop)) != kostant_count(rs, drop):
            raise ConsistencyError(f"PBW basis at {drop} disagrees with the Kostant count")
    logger.info(f"Built Verma window for {weight} ({rs.cartan_type.name}) to depth {depth}")
    return window


def contravariant_gram(window: VermaWindow, drop: Sequence[int]) -> List[List[Fraction]]:
    return window.gram(drop)


def simple_weight_dim(rs: RootSystem, weight: Weight, drop: Sequence[int], depth: Optional[int] = None) -> int:
    """dim L(lambda)_{lambda - drop} as the rank of the contravariant form."""
    depth = sum(drop) if depth is None else depth
    return VermaWindow(rs, weight, depth).simple_dim(drop)


def singular_vectors(window: VermaWindow, drop: Sequence[int]) -> List[Vector]:
    return window.singular_vectors(drop)


def height_one_coefficient(pairing: int, n: int) -> Fraction:
    """x^n y^n v+ = n! prod_{i<n} (m - i) v+ for an sl2-triple with <lambda, alpha^vee> = m."""
    value = Fraction(factorial(n))
    for i in range(n):
        value *= pairing - i
    return value


@dataclass(frozen=True)
class JHFactor:
    weight: Weight
    drop: Drop
    multiplicity: int

    def to_json(self) -> Dict:
        return {"mu": self.weight.to_json(), "drop": list(self.drop), "multiplicity": self.multiplicity}


def jh_verma_bruteforce(rs: RootSystem, weight: Weight, depth: int, max_rank: Optional[int] = None) -> List[JHFactor]:
    """
    Composition factors of M(lambda) by peeling simple characters off the
    Verma character, highest first.

    Raises:
        BoundExceededError: For ranks above the configured limit
        WindowTooShallowError: If a linked highest weight lies below the window
        ConsistencyError: If an unlinked weight shows up in the residual
    """
    max_rank = get_toolkit_config()["jh_max_rank"] if max_rank is None else max_rank
    if rs.rank > max_rank:
        raise BoundExceededError(f"Brute-force JH is limited to rank {max_rank}", {"rank": rs.rank})
    if not is_integral(rs, weight):
        logger.warning(f"{weight} is not integral; only integral dot-translates are considered")

    candidates = {}
    for entry in linkage_class(rs, weight):
        drop = entry.drop
        if drop is None or any(c.denominator != 1 or c < 0 for c in drop):
            continue
        drop = tuple(int(c) for c in drop)
        if sum(drop) > depth:
            raise WindowTooShallowError(
                f"Linked weight {entry.weight} needs depth {sum(drop)}, window has {depth}",
                {"needed": sum(drop), "depth": depth},
            )
        candidates[drop] = entry.weight

    drops = window_drops(rs.rank, depth)
    residual = {d: kostant_count(rs, d) for d in drops}
    factors: List[JHFactor] = []
    for drop in drops:
        m = residual[drop]
        if m == 0:
            continue
        if m < 0 or drop not in candidates:
            raise ConsistencyError(f"Residual {m} at unlinked drop {drop}", {"drop": list(drop)})
        mu = candidates[drop]
        factors.append(JHFactor(mu, drop, m))
        sub = VermaWindow(rs, mu, depth - sum(drop))
        for inner in window_drops(rs.rank, depth - sum(drop)):
            dim = sub.simple_dim(inner)
            if dim:
                target = tuple(a + b for a, b in zip(drop, inner))
                residual[target] -= m * dim
    if any(residual.values()):
        raise WindowTooShallowError("Nonzero residual character at the window boundary")
    logger.info(f"M({weight}) has {sum(f.multiplicity for f in factors)} composition factors")
    return factors
