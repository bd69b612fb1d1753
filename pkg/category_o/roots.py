"""
Root systems of types A-G with exact weight arithmetic.

Roots are integer tuples in the simple-root basis; weights are either GL-style
integer tuples (for ``GL_{d+1}``) or fundamental-weight coordinates. Positive
roots are ordered by height, then by descending coordinates, and that order is
the PBW order used everywhere else in the package.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .errors import ConsistencyError, InvalidCartanTypeError, NotARootError, WeightError

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]
Drop = Tuple[int, ...]

GL_TUPLE = "gl_tuple"
FUNDAMENTAL = "fundamental"

SIGN_CONVENTION = "extraspecial_positive"

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class CartanType:
    """A Cartan type such as ``A2``, ``G2`` or the reductive ``GL3``."""

    family: str
    rank: int
    reductive_gl: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidCartanTypeError(f"Unknown family {self.family!r}", {"family": self.family})
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                raise InvalidCartanTypeError(
                    f"Type {self.family}{self.rank} does not exist",
                    {"family": self.family, "rank": self.rank},
                )
        elif self.rank < _MIN_RANK[self.family]:
            raise InvalidCartanTypeError(
                f"Rank {self.rank} is not admissible for family {self.family}",
                {"family": self.family, "rank": self.rank},
            )
        if self.reductive_gl and self.family != "A":
            raise InvalidCartanTypeError("The GL weight convention only exists for type A")

    @property
    def name(self) -> str:
        if self.reductive_gl:
            return f"GL{self.rank + 1}"
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, label: str, gl_dim: Optional[int] = None) -> "CartanType":
        """
        Parse labels like ``A2``, ``g2`` or ``GL3`` (``GLn`` with ``gl_dim``).

        Args:
            label: The type label
            gl_dim: Size n of GL_n when the label is the bare ``GLn``/``GL``

        Returns:
            CartanType

        Raises:
            InvalidCartanTypeError: If the label cannot be parsed
        """
        text = label.strip().upper()
        if text.startswith("GL"):
            digits = text[2:]
            if digits in ("", "N"):
                if gl_dim is None:
                    raise InvalidCartanTypeError("GLn needs an explicit dimension (--gl-dim)")
                size = gl_dim
            else:
                try:
                    size = int(digits)
                except ValueError:
                    raise InvalidCartanTypeError(f"Cannot parse Cartan type {label!r}")
            if size < 2:
                raise InvalidCartanTypeError("GL_n needs n >= 2")
            return cls("A", size - 1, True)
        if len(text) < 2 or text[0] not in FAMILIES:
            raise InvalidCartanTypeError(f"Cannot parse Cartan type {label!r}")
        try:
            rank = int(text[1:])
        except ValueError:
            raise InvalidCartanTypeError(f"Cannot parse Cartan type {label!r}")
        return cls(text[0], rank)


@dataclass(frozen=True)
class Weight:
    """An integral (or rational, for rho-shifts) weight in a tagged basis."""

    coords: Tuple[Fraction, ...]
    basis: str

    @classmethod
    def of(cls, values: Iterable, basis: str = FUNDAMENTAL) -> "Weight":
        if basis not in (GL_TUPLE, FUNDAMENTAL):
            raise WeightError(f"Unknown weight basis {basis!r}")
        return cls(tuple(Fraction(v) for v in values), basis)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def _check(self, other: "Weight"):
        if self.basis != other.basis or len(self.coords) != len(other.coords):
            raise WeightError("Weights live in different bases", {"left": self.basis, "right": other.basis})

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def to_json(self) -> List:
        return [int(c) if c.denominator == 1 else str(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.to_json()) + ")"


def _simple_root_gram(family: str, rank: int) -> List[List[Fraction]]:
    """Inner products of simple roots (Bourbaki numbering, long roots of squared length 2)."""
    n = rank
    gram = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, value):
        gram[i][j] = gram[j][i] = Fraction(value)

    if family in ("A", "D", "E"):
        for i in range(n):
            gram[i][i] = Fraction(2)
        if family == "A":
            for i in range(n - 1):
                link(i, i + 1, -1)
        elif family == "D":
            for i in range(n - 2):
                link(i, i + 1, -1)
            link(n - 3, n - 1, -1)
        else:
            # 1-3-4-5-6-7-8 with 2 attached to 4
            for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)):
                if j < n:
                    link(i, j, -1)
            link(1, 3, -1)
    elif family == "B":
        for i in range(n - 1):
            gram[i][i] = Fraction(2)
            link(i, i + 1, -1)
        gram[n - 1][n - 1] = Fraction(1)
    elif family == "C":
        for i in range(n - 1):
            gram[i][i] = Fraction(1)
        for i in range(n - 2):
            link(i, i + 1, Fraction(-1, 2))
        gram[n - 1][n - 1] = Fraction(2)
        link(n - 2, n - 1, -1)
    elif family == "F":
        gram[0][0] = gram[1][1] = Fraction(2)
        gram[2][2] = gram[3][3] = Fraction(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif family == "G":
        gram[0][0] = Fraction(2, 3)
        gram[1][1] = Fraction(2)
        link(0, 1, -1)
    return gram


class RootSystem:
    """
    Roots, Cartan pairings and weight arithmetic for one Cartan type.

    Instances are immutable after construction and safe to share.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.inner_form = _simple_root_gram(cartan_type.family, cartan_type.rank)
        n = self.rank
        # a[i][j] = <alpha_j, alpha_i^vee>
        self.cartan_matrix = np.array(
            [[int(2 * self.inner_form[i][j] / self.inner_form[i][i]) for j in range(n)] for i in range(n)],
            dtype=np.int64,
        )
        self.simple_roots: List[Root] = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        self.positive_roots: List[Root] = self._close_positive_roots()
        self._index = {beta: k for k, beta in enumerate(self.positive_roots)}
        self._root_set = set(self.positive_roots) | {tuple(-c for c in b) for b in self.positive_roots}
        logger.debug(f"Built root system {cartan_type.name} with {len(self.positive_roots)} positive roots")

    # -- roots -------------------------------------------------------------

    def _close_positive_roots(self) -> List[Root]:
        found = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(self.rank):
                    image = self.reflect_root(beta, i)
                    if all(c >= 0 for c in image) and image not in found:
                        found.add(image)
                        nxt.append(image)
            frontier = nxt
        return sorted(found, key=lambda b: (sum(b), tuple(-c for c in b)))

    def reflect_root(self, beta: Sequence[int], i: int) -> Root:
        """Simple reflection s_i applied to a root-lattice vector."""
        pairing = sum(int(beta[j]) * int(self.cartan_matrix[i][j]) for j in range(self.rank))
        return tuple(int(beta[j]) - (pairing if j == i else 0) for j in range(self.rank))

    @property
    def roots(self) -> List[Root]:
        return list(self.positive_roots) + [tuple(-c for c in b) for b in self.positive_roots]

    def is_root(self, vector: Sequence[int]) -> bool:
        return tuple(vector) in self._root_set

    def is_positive(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self._index

    def index(self, beta: Sequence[int]) -> int:
        """PBW position of a positive root."""
        try:
            return self._index[tuple(beta)]
        except KeyError:
            raise NotARootError(f"{tuple(beta)} is not a positive root of {self.cartan_type.name}")

    def height(self, beta: Sequence[int]) -> int:
        if not self.is_root(beta):
            raise NotARootError(f"{tuple(beta)} is not a root of {self.cartan_type.name}")
        return sum(beta)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """Invariant form on the root lattice (simple-root coordinates)."""
        total = Fraction(0)
        for i in range(self.rank):
            if u[i]:
                for j in range(self.rank):
                    if v[j]:
                        total += Fraction(u[i]) * Fraction(v[j]) * self.inner_form[i][j]
        return total

    def norm2(self, beta: Sequence) -> Fraction:
        return self.inner(beta, beta)

    def root_pairing(self, beta: Sequence, alpha: Sequence) -> Fraction:
        """<beta, alpha^vee> for root-lattice vectors."""
        return 2 * self.inner(beta, alpha) / self.norm2(alpha)

    def coroot_coefficients(self, beta: Sequence[int]) -> Tuple[Fraction, ...]:
        """Coordinates of beta^vee in the basis of simple coroots."""
        nb = self.norm2(beta)
        return tuple(Fraction(beta[k]) * self.inner_form[k][k] / nb for k in range(self.rank))

    def support(self, beta: Sequence[int]) -> frozenset:
        """Simple indices (1-based) occurring in beta."""
        return frozenset(k + 1 for k, c in enumerate(beta) if c)

    def roots_of_subset(self, subset: Iterable[int]) -> List[Root]:
        """Positive roots of the Levi factor attached to a set of simple indices (1-based)."""
        chosen = set(subset)
        return [b for b in self.positive_roots if self.support(b) <= chosen]

    # -- weights -----------------------------------------------------------

    @property
    def weight_basis(self) -> str:
        return GL_TUPLE if self.cartan_type.reductive_gl else FUNDAMENTAL

    @property
    def weight_length(self) -> int:
        return self.rank + 1 if self.cartan_type.reductive_gl else self.rank

    def weight(self, values: Iterable) -> Weight:
        w = Weight.of(values, self.weight_basis)
        self.check_weight(w)
        return w

    def zero_weight(self) -> Weight:
        return Weight.of([0] * self.weight_length, self.weight_basis)

    def check_weight(self, w: Weight):
        if w.basis != self.weight_basis or len(w.coords) != self.weight_length:
            raise WeightError(
                f"Weight {w} does not match {self.cartan_type.name}",
                {"basis": w.basis, "expected_basis": self.weight_basis, "expected_length": self.weight_length},
            )

    @cached_property
    def rho(self) -> Weight:
        if self.cartan_type.reductive_gl:
            return Weight.of(range(self.rank, -1, -1), GL_TUPLE)
        return Weight.of([1] * self.rank, FUNDAMENTAL)

    def simple_root_weight(self, k: int) -> Weight:
        """alpha_{k+1} expressed in the weight basis (k is 0-based)."""
        if self.cartan_type.reductive_gl:
            return Weight.of([1 if j == k else -1 if j == k + 1 else 0 for j in range(self.rank + 1)], GL_TUPLE)
        return Weight.of([int(self.cartan_matrix[j][k]) for j in range(self.rank)], FUNDAMENTAL)

    def simple_pairings(self, w: Weight) -> Tuple[Fraction, ...]:
        """(<w, alpha_1^vee>, ..., <w, alpha_n^vee>)."""
        self.check_weight(w)
        if w.basis == GL_TUPLE:
            return tuple(w.coords[k] - w.coords[k + 1] for k in range(self.rank))
        return tuple(w.coords)

    def coroot_pairing(self, w: Weight, beta: Sequence[int]) -> Fraction:
        """
        <w, beta^vee> for a root beta.

        Args:
            w: Weight in this root system's basis
            beta: Root in simple-root coordinates

        Returns:
            Fraction: the pairing

        Raises:
            WeightError: On a basis mismatch
            NotARootError: If beta is not a root
        """
        if not self.is_root(beta):
            raise NotARootError(f"{tuple(beta)} is not a root of {self.cartan_type.name}")
        pairings = self.simple_pairings(w)
        return sum((c * p for c, p in zip(self.coroot_coefficients(beta), pairings)), Fraction(0))

    def subtract_drop(self, w: Weight, drop: Sequence) -> Weight:
        """w minus a simple-root combination."""
        coords = list(w.coords)
        for k, c in enumerate(drop):
            if c:
                alpha = self.simple_root_weight(k).coords
                coords = [x - Fraction(c) * a for x, a in zip(coords, alpha)]
        return Weight(tuple(coords), w.basis)

    def add_drop(self, w: Weight, drop: Sequence) -> Weight:
        return self.subtract_drop(w, [-Fraction(c) for c in drop])

    def drop_between(self, mu: Weight, nu: Weight) -> Optional[Tuple[Fraction, ...]]:
        """
        Simple-root coordinates of mu - nu, or None when mu - nu is not in
        the rational span of the roots.
        """
        self.check_weight(mu)
        self.check_weight(nu)
        diff = [a - b for a, b in zip(mu.coords, nu.coords)]
        if mu.basis == GL_TUPLE:
            if sum(diff) != 0:
                return None
            partial, out = Fraction(0), []
            for k in range(self.rank):
                partial += diff[k]
                out.append(partial)
            return tuple(out)
        matrix = self._inverse_cartan_transpose
        return tuple(sum((matrix[k][j] * diff[j] for j in range(self.rank)), Fraction(0)) for k in range(self.rank))

    @cached_property
    def _inverse_cartan_transpose(self) -> List[List[Fraction]]:
        # columns of cartan_matrix are the simple roots in fundamental coordinates
        return linalg.inverse([[Fraction(int(self.cartan_matrix[j][k])) for k in range(self.rank)] for j in range(self.rank)])

    def dominance_compare(self, mu: Weight, nu: Weight) -> str:
        """Return one of ``greater``, ``less``, ``equal``, ``incomparable``."""
        drop = self.drop_between(mu, nu)
        if drop is None:
            return "incomparable"
        if all(c == 0 for c in drop):
            return "equal"
        if all(c >= 0 for c in drop):
            return "greater"
        if all(c <= 0 for c in drop):
            return "less"
        return "incomparable"

    def reflect_weight(self, w: Weight, k: int) -> Weight:
        """Simple reflection s_{k+1} (k is 0-based) on a weight."""
        if w.basis == GL_TUPLE:
            coords = list(w.coords)
            coords[k], coords[k + 1] = coords[k + 1], coords[k]
            return Weight(tuple(coords), w.basis)
        pairing = w.coords[k]
        alpha = self.simple_root_weight(k).coords
        return Weight(tuple(x - pairing * a for x, a in zip(w.coords, alpha)), w.basis)

    def is_dominant(self, w: Weight, subset: Optional[Iterable[int]] = None) -> bool:
        """Dominant integral with respect to the simple indices in subset (default: all)."""
        pairings = self.simple_pairings(w)
        indices = range(1, self.rank + 1) if subset is None else subset
        return all(pairings[k - 1].denominator == 1 and pairings[k - 1] >= 0 for k in indices)

    def parse_weight(self, text: str) -> Weight:
        """Parse a comma tuple; a bare ``0`` means the zero weight."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if parts == ["0"]:
            return self.zero_weight()
        try:
            values = [Fraction(p) for p in parts]
        except ValueError:
            raise WeightError(f"Cannot parse weight {text!r}")
        return self.weight(values)

    # -- derived data ------------------------------------------------------

    @cached_property
    def chevalley(self) -> "ChevalleyBasis":
        return ChevalleyBasis(self)

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "cartan_type": self.cartan_type.name,
            "family": self.cartan_type.family,
            "rank": self.rank,
            "reductive_gl": self.cartan_type.reductive_gl,
            "positive_roots": [list(b) for b in self.positive_roots],
            "heights": [sum(b) for b in self.positive_roots],
            "cartan_matrix": self.cartan_matrix.tolist(),
            "inner_form": [[str(x) for x in row] for row in self.inner_form],
        }


def build_root_system(cartan_type: CartanType) -> RootSystem:
    """Build the root system of a Cartan type."""
    return _cached_root_system(cartan_type)


_ROOT_SYSTEMS: Dict[CartanType, RootSystem] = {}


def _cached_root_system(cartan_type: CartanType) -> RootSystem:
    if cartan_type not in _ROOT_SYSTEMS:
        _ROOT_SYSTEMS[cartan_type] = RootSystem(cartan_type)
    return _ROOT_SYSTEMS[cartan_type]


def root_system(label: str, gl_dim: Optional[int] = None) -> RootSystem:
    """Shortcut: ``root_system("A2")``."""
    return build_root_system(CartanType.parse(label, gl_dim))


def height(beta: Sequence[int]) -> int:
    """Sum of simple-root coordinates of a root."""
    return sum(beta)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _neg(a: Root) -> Root:
    return tuple(-x for x in a)


class ChevalleyBasis:
    """
    Integer structure constants N(a, b) with [e_a, e_b] = N(a, b) e_{a+b}.

    Signs are fixed by taking N = +(p+1) on extraspecial pairs; every other
    constant follows from the standard identities. Jacobi is verified on
    construction for rank <= 4.
    """

    sign_convention = SIGN_CONVENTION

    def __init__(self, rs: RootSystem, verify: Optional[bool] = None):
        self.rs = rs
        self._table: Dict[Tuple[Root, Root], int] = {}
        self._extraspecial: Dict[Root, Tuple[Root, Root]] = {}
        for xi in rs.positive_roots:
            for a in rs.positive_roots:
                b = tuple(x - y for x, y in zip(xi, a))
                if rs.is_positive(b) and rs.index(a) < rs.index(b):
                    self._extraspecial[xi] = (a, b)
                    break
        self.constants: Dict[Tuple[Root, Root], int] = {}
        for a in rs.roots:
            for b in rs.roots:
                if rs.is_root(_add(a, b)):
                    self.constants[(a, b)] = self.N(a, b)
        self._check_string_rule()
        if verify if verify is not None else rs.rank <= 4:
            self.verify_jacobi()

    def string_length(self, a: Root, b: Root) -> int:
        """p = max{k : b - k a is a root}."""
        p = 0
        while self.rs.is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
            p += 1
        return p

    def N(self, a: Sequence[int], b: Sequence[int]) -> int:
        a, b = tuple(a), tuple(b)
        s = _add(a, b)
        if not self.rs.is_root(s):
            return 0
        if (a, b) in self._table:
            return self._table[(a, b)]
        rs = self.rs
        pa, pb = rs.is_positive(a), rs.is_positive(b)
        if pa and pb:
            value = self._positive_pair(a, b)
        elif not pa and not pb:
            value = -self.N(_neg(a), _neg(b))
        else:
            c = _neg(s)
            if pa:
                if rs.is_positive(c):
                    value = rs.norm2(c) / rs.norm2(b) * self.N(c, a)
                else:
                    value = rs.norm2(c) / rs.norm2(a) * self.N(b, c)
            else:
                if rs.is_positive(c):
                    value = rs.norm2(c) / rs.norm2(a) * self.N(b, c)
                else:
                    value = rs.norm2(c) / rs.norm2(b) * self.N(c, a)
        value = Fraction(value)
        if value.denominator != 1:
            raise ConsistencyError(f"Non-integral structure constant N{a, b} = {value}")
        self._table[(a, b)] = int(value)
        return int(value)

    def _positive_pair(self, a: Root, b: Root):
        rs = self.rs
        if rs.index(a) > rs.index(b):
            return -self.N(b, a)
        xi = _add(a, b)
        r1, s1 = self._extraspecial[xi]
        if (a, b) == (r1, s1):
            return self.string_length(a, b) + 1
        total = Fraction(0)
        for u, v, w, z in ((b, _neg(r1), a, _neg(s1)), (_neg(r1), a, b, _neg(s1))):
            first = self.N(u, v)
            if first:
                total += Fraction(first * self.N(w, z)) / rs.norm2(_add(u, v))
        return rs.norm2(xi) / self.N(r1, s1) * total

    def _check_string_rule(self):
        for (a, b), value in self.constants.items():
            if abs(value) != self.string_length(a, b) + 1:
                raise ConsistencyError(f"|N{a, b}| = {abs(value)} violates the string rule")

    # -- brackets ----------------------------------------------------------

    def coroot(self, a: Root) -> Dict:
        """h_a as a combination of simple coroots h_i (keys ('h', i), 0-based)."""
        return {("h", k): c for k, c in enumerate(self.rs.coroot_coefficients(a)) if c}

    def bracket_basis(self, u, v) -> Dict:
        """Bracket of two basis elements: a root tuple (e_root) or ('h', i)."""
        rs = self.rs
        if u[0] == "h" and v[0] == "h":
            return {}
        if u[0] == "h":
            return {v: Fraction(int(rs.root_pairing(v, rs.simple_roots[u[1]])))}
        if v[0] == "h":
            return {u: -Fraction(int(rs.root_pairing(u, rs.simple_roots[v[1]])))}
        s = _add(u, v)
        if all(c == 0 for c in s):
            return {k: Fraction(c) for k, c in self.coroot(u).items()}
        n = self.N(u, v)
        return {s: Fraction(n)} if n else {}

    def bracket(self, x: Dict, y: Dict) -> Dict:
        out: Dict = {}
        for u, cu in x.items():
            for v, cv in y.items():
                for w, c in self.bracket_basis(u, v).items():
                    out[w] = out.get(w, 0) + cu * cv * c
        return {k: c for k, c in out.items() if c}

    def verify_jacobi(self):
        """Check the Jacobi identity on every triple of root vectors."""
        roots = self.rs.roots
        for a, b, c in product(roots, repeat=3):
            ea, eb, ec = {a: 1}, {b: 1}, {c: 1}
            total: Dict = {}
            for x, y, z in ((ea, eb, ec), (eb, ec, ea), (ec, ea, eb)):
                for k, v in self.bracket(x, self.bracket(y, z)).items():
                    total[k] = total.get(k, 0) + v
            if any(total.values()):
                raise ConsistencyError(f"Jacobi identity fails on {a}, {b}, {c}")
        logger.debug(f"Jacobi verified for {self.rs.cartan_type.name}")

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "cartan_type": self.rs.cartan_type.name,
            "sign_convention": self.sign_convention,
            "constants": [[list(a), list(b), n] for (a, b), n in sorted(self.constants.items())],
        }


def chevalley_constants(rs: RootSystem) -> ChevalleyBasis:
    """Structure constants of a Chevalley basis (cached on the root system)."""
    if rs.rank > 8:
        raise InvalidCartanTypeError("Chevalley constants are only built up to rank 8")
    return rs.chevalley
