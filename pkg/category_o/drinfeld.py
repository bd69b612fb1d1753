"""
Line bundles L_lambda = O(r - s) (x) det^s on P^d with lambda = (r, s, ..., s),
for G = GL_{d+1}.

Weights are GL tuples (length d + 1). Computations on the local cohomology
modules run with s = 0 and re-apply the det^s twist to reported weights.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import pandas as pd

from .characters import weyl_dim
from .errors import ConsistencyError, WeightError
from .roots import CartanType, RootSystem, Weight, build_root_system
from .weyl import ParabolicSubset, dot_action, max_parabolic_for, w_family

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class LineBundleSpec:
    d: int
    r: int
    s: int

    def __post_init__(self):
        if self.d < 1:
            raise WeightError(f"Projective space dimension must be >= 1, got {self.d}")

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(CartanType("A", self.d, True))

    @property
    def weight(self) -> Weight:
        return self.root_system.weight([self.r] + [self.s] * self.d)

    def w_dot(self, i: int) -> Weight:
        """w_i . lambda with w_i = s_i ... s_1."""
        return dot_action(w_family(self.root_system, i), self.weight)

    def to_json(self) -> Dict:
        return {"d": self.d, "r": self.r, "s": self.s}


@dataclass
class BottResult:
    degenerate: bool
    i0: int
    h_dim: int
    h_weight: Optional[Weight]
    cohomology: List[int]
    note: Optional[str] = None

    def to_json(self) -> Dict:
        return {
            "degenerate": self.degenerate,
            "i0": self.i0,
            "h_dim": self.h_dim,
            "h_weight": self.h_weight.to_json() if self.h_weight is not None else None,
            "cohomology": self.cohomology,
            "note": self.note,
        }


def bott(spec: LineBundleSpec) -> BottResult:
    """
    Cohomology of L_lambda on P^d.

    i0 = 0 for r >= s, i0 = d for s >= r + d + 1; otherwise the bundle is
    degenerate with i0 = s - r - 1 and all cohomology vanishes.
    """
    d, r, s = spec.d, spec.r, spec.s
    rs = spec.root_system
    if r >= s:
        i0 = 0
    elif s >= r + d + 1:
        i0 = d
    else:
        i0 = s - r - 1
        if spec.w_dot(i0) != spec.w_dot(i0 + 1):
            raise ConsistencyError(f"w_{i0}.lambda and w_{i0 + 1}.lambda differ for {spec}")
        return BottResult(True, i0, 0, None, [0] * (d + 1))
    h_weight = spec.w_dot(i0)
    if not rs.is_dominant(h_weight):
        raise ConsistencyError(f"w_{i0}.lambda = {h_weight} is not dominant")
    h_dim = weyl_dim(rs, h_weight)
    cohomology = [h_dim if q == i0 else 0 for q in range(d + 1)]
    note = None
    if i0 == 0 and h_dim > 1:
        note = f"H^0 has dimension {h_dim}, not 1, since r - s = {r - s} > 0"
    return BottResult(False, i0, h_dim, h_weight, cohomology, note)


@dataclass
class WeightTableRow:
    i: int
    weight: Weight
    relation_to_next: Optional[str]
    expected: Optional[str]

    @property
    def consistent(self) -> bool:
        return self.relation_to_next == self.expected


def weight_table(spec: LineBundleSpec) -> List[WeightTableRow]:
    """w_i . lambda for i = 0..d with the dominance relation to w_{i+1} . lambda."""
    rs = spec.root_system
    i0 = bott(spec).i0
    weights = [spec.w_dot(i) for i in range(spec.d + 1)]
    rows = []
    for i, weight in enumerate(weights):
        if i == spec.d:
            rows.append(WeightTableRow(i, weight, None, None))
            continue
        relation = rs.dominance_compare(weight, weights[i + 1])
        coefficient = spec.r + i + 1 - spec.s
        expected = "greater" if coefficient > 0 else "equal" if coefficient == 0 else "less"
        rows.append(WeightTableRow(i, weight, relation, expected))
    bad = [row.i for row in rows if not row.consistent]
    if bad:
        raise ConsistencyError(f"Dominance chain broken at {bad} for {spec}")
    logger.debug(f"Weight table for {spec} (i0={i0}) verified")
    return rows


def weight_table_frame(rows: List[WeightTableRow]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"i": row.i, "w_i.lambda": str(row.weight), "vs_next": row.relation_to_next or ""} for row in rows],
        columns=["i", "w_i.lambda", "vs_next"],
    )


def mu_weight(spec: LineBundleSpec, i: int) -> Weight:
    """
    mu_{i,lambda} = w_{i-1} . lambda for i <= i0, w_i . lambda otherwise.

    Raises:
        WeightError: If i is outside 1..d
    """
    if not 1 <= i <= spec.d:
        raise WeightError(f"mu_{i} needs 1 <= i <= {spec.d}", {"i": i})
    i0 = bott(spec).i0
    mu = spec.w_dot(i - 1) if i <= i0 else spec.w_dot(i)
    levi = ParabolicSubset.from_blocks((i, spec.d - i + 1))
    if not spec.root_system.is_dominant(mu, levi.indices):
        raise ConsistencyError(f"mu_{i} = {mu} is not dominant for the Levi of type {levi.blocks}")
    return mu


@dataclass
class MonomialModuleWindow:
    """
    Laurent monomials X^k with k_0..k_{i-1} < 0, k_i..k_d >= 0 and |k| = r - s,
    at drop height <= height below the top weight.
    """

    spec: LineBundleSpec
    i: int
    height: int
    top: Exponents
    monomials: List[Exponents] = field(default_factory=list)

    def in_region(self, k: Exponents) -> bool:
        return all(k[a] < 0 for a in range(self.i)) and all(k[b] >= 0 for b in range(self.i, len(k)))

    def drop_height(self, k: Exponents) -> int:
        """Height of top - k in the simple-root basis."""
        partial, total = 0, 0
        for a in range(len(k) - 1):
            partial += self.top[a] - k[a]
            total += partial
        return total

    def act(self, a: int, b: int, k: Exponents) -> Tuple[int, Optional[Exponents]]:
        """L_(a,b) X^k = k_b X^{k + e_a - e_b}; zero outside the region."""
        coefficient = k[b]
        target = list(k)
        target[a] += 1
        target[b] -= 1
        target = tuple(target)
        if coefficient == 0 or not self.in_region(target):
            return 0, None
        return coefficient, target

    def populate(self):
        d = self.spec.d
        found = set()
        # drops c_1..c_d in the simple-root basis determine k
        for c in _bounded_vectors(d, self.height):
            full = (0,) + c + (0,)
            k = tuple(self.top[a] - (full[a + 1] - full[a]) for a in range(d + 1))
            if self.in_region(k):
                found.add(k)
        self.monomials = sorted(found, key=lambda k: (self.drop_height(k), tuple(-x for x in k)))
        return self


def _bounded_vectors(length: int, bound: int):
    if length == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in _bounded_vectors(length - 1, bound - first):
            yield (first,) + rest


def maximal_exponents(spec: LineBundleSpec, i: int) -> Exponents:
    """Exponents (s = 0) of the maximal vector of the i-th local cohomology module."""
    n = spec.r - spec.s
    i0 = bott(spec).i0
    d = spec.d
    if i <= i0:
        return tuple([-1] * (i - 1) + [n + i - 1] + [0] * (d - i + 1))
    return tuple([-1] * i + [n + i] + [0] * (d - i))


@dataclass
class LocalCohomologyReport:
    spec: LineBundleSpec
    i: int
    height: int
    mu: Weight
    vector: Exponents
    annihilated: bool
    weight_matches: bool
    weights_distinct: bool
    cyclic: bool
    cocyclic: bool
    window_size: int
    unreached: List[Exponents] = field(default_factory=list)
    blocked: List[Exponents] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.annihilated and self.weight_matches and self.weights_distinct and self.cyclic and self.cocyclic

    def to_json(self) -> Dict:
        return {
            "spec": self.spec.to_json(),
            "i": self.i,
            "height": self.height,
            "mu": self.mu.to_json(),
            "maximal_vector": list(self.vector),
            "annihilated": self.annihilated,
            "weight_matches": self.weight_matches,
            "weights_distinct": self.weights_distinct,
            "cyclic": self.cyclic,
            "cocyclic": self.cocyclic,
            "window_size": self.window_size,
            "unreached": [list(k) for k in self.unreached],
            "blocked": [list(k) for k in self.blocked],
            "passed": self.passed,
        }


def _reachable(window: MonomialModuleWindow, start: Exponents, raising: bool) -> set:
    members = set(window.monomials)
    size = window.spec.d + 1
    pairs = [(a, b) for a in range(size) for b in range(size) if (a < b) == raising and a != b]
    seen, frontier = {start}, [start]
    while frontier:
        nxt = []
        for k in frontier:
            for a, b in pairs:
                coefficient, target = window.act(a, b, k)
                if coefficient and target in members and target not in seen:
                    seen.add(target)
                    nxt.append(target)
        frontier = nxt
    return seen


def verify_local_cohomology(spec: LineBundleSpec, i: int, height: int = 6) -> LocalCohomologyReport:
    """
    Check that the i-th local cohomology monomial module is L(mu_{i,lambda}) on a window:
    the designated vector is maximal of weight mu_{i,lambda}, generates every
    window monomial by lowering and is reached from each of them by raising.
    """
    mu = mu_weight(spec, i)
    vector = maximal_exponents(spec, i)
    window = MonomialModuleWindow(spec, i, height, vector).populate()
    size = spec.d + 1

    annihilated = window.in_region(vector) and all(
        window.act(a, b, vector)[0] == 0 for a in range(size) for b in range(a + 1, size)
    )
    twisted = tuple(Fraction(k + spec.s) for k in vector)
    weight_matches = twisted == mu.coords
    weights_distinct = len(set(window.monomials)) == len(window.monomials)

    down = _reachable(window, vector, raising=False)
    unreached = [k for k in window.monomials if k not in down]
    cocyclic, blocked = True, []
    for k in window.monomials:
        if vector not in _reachable(window, k, raising=True):
            cocyclic = False
            blocked.append(k)
    if blocked:
        logger.warning(f"{len(blocked)} window monomials cannot be raised back to the maximal vector")
    report = LocalCohomologyReport(
        spec, i, height, mu, vector, annihilated, weight_matches, weights_distinct,
        not unreached, cocyclic, len(window.monomials), unreached, blocked,
    )
    logger.info(f"Local cohomology check for {spec}, i={i}: {'passed' if report.passed else 'failed'}")
    return report


@dataclass
class GradedPiece:
    j: int
    steinberg_dim: int
    steinberg_label: Optional[str]
    induction_parabolic: ParabolicSubset
    induction_weight: Weight
    twisted_weight: Weight
    smooth_label: str
    stabilizer_matches: bool

    @property
    def induction_label(self) -> str:
        return f"Ind^G_{self.induction_parabolic.label(True)}(U_{self.j}')"

    def to_json(self) -> Dict:
        return {
            "j": self.j,
            "steinberg": {
                "present": self.steinberg_dim > 0,
                "cohomology_dim": self.steinberg_dim,
                "label": self.steinberg_label,
                "irreducible": True if self.steinberg_dim else None,
            },
            "induction": {
                "label": self.induction_label,
                "Q": list(self.induction_parabolic.blocks),
                "mu": self.induction_weight.to_json(),
                "twisted_mu": self.twisted_weight.to_json(),
                "smooth": self.smooth_label,
                "irreducible": self.stabilizer_matches,
            },
        }


@dataclass
class FiltrationReport:
    spec: LineBundleSpec
    bott: BottResult
    pieces: List[GradedPiece]
    bottom_dim: int

    def constituents(self) -> List[str]:
        """Essentially Jordan-Hölder list, from the top graded piece down to H^0."""
        out = []
        for piece in self.pieces:
            if piece.steinberg_label:
                out.append(piece.steinberg_label)
            out.append(piece.induction_label)
        if self.bottom_dim:
            out.append("K" if self.bottom_dim == 1 else f"H^0(P^{self.spec.d}, L)' (dim {self.bottom_dim})")
        return out

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "spec": self.spec.to_json(),
            "bott": self.bott.to_json(),
            "pieces": [p.to_json() for p in self.pieces],
            "bottom": {"h0_dim": self.bottom_dim},
            "constituents": self.constituents(),
            "total_constituents": len(self.constituents()),
        }

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for p in self.pieces:
            rows.append({
                "j": p.j,
                "steinberg": p.steinberg_label or "-",
                "induction": p.induction_label,
                "mu": str(p.induction_weight),
                "irreducible": "yes" if p.stabilizer_matches else "unknown",
            })
        return pd.DataFrame(rows, columns=["j", "steinberg", "induction", "mu", "irreducible"])


def _block_swap(weight: Weight, split: int) -> Weight:
    """Move the first split entries behind the rest (conjugation by the block permutation)."""
    coords = weight.coords
    return Weight(coords[split:] + coords[:split], weight.basis)


def filtration_report(spec: LineBundleSpec) -> FiltrationReport:
    """Graded pieces of the equivariant filtration of the sections of L_lambda on the Drinfeld space."""
    rs = spec.root_system
    result = bott(spec)
    d = spec.d
    if sum(1 for h in result.cohomology if h) > 1:
        raise ConsistencyError(f"More than one nonzero cohomology group for {spec}")
    pieces = []
    for j in range(d):
        i = d - j
        h = result.cohomology[d - j]
        steinberg_parabolic = ParabolicSubset.from_blocks((j + 1,) + (1,) * (d - j))
        steinberg_label = f"v^G_{steinberg_parabolic.label(True)}(H^{d - j}')" if h else None
        Q = ParabolicSubset.from_blocks((j + 1, d - j))
        mu = mu_weight(spec, i)
        stabilizer = max_parabolic_for(rs, mu)
        smooth = f"v^{Q.label(True)}_{steinberg_parabolic.label(True)}" if j + 1 > 1 else "1"
        pieces.append(GradedPiece(
            j, h, steinberg_label, Q, mu, _block_swap(mu, i), smooth,
            stabilizer.blocks == (i, d - i + 1),
        ))
    logger.info(f"Filtration report for {spec}: {len(pieces)} graded pieces, H^0 of dimension {result.cohomology[0]}")
    return FiltrationReport(spec, result, pieces, result.cohomology[0])
