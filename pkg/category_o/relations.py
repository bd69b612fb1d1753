"""
Checks of the root combinatorics and coefficient estimates behind the
irreducibility criterion.

Windows are queried through their contravariant form: a vector of M(lambda)
vanishes in L(lambda) exactly when the Gram matrix kills it.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd
from sympy import isprime

from category_o_settings import get_toolkit_config

from . import linalg
from .errors import BoundExceededError, NotARootError, WeightError, WindowTooShallowError
from .roots import Drop, Root, RootSystem, Weight
from .characters import window_drops
from .verma import PBWMonomial, VermaWindow, height_one_coefficient
from .weyl import is_integral, max_parabolic_for

logger = logging.getLogger(__name__)


def prime_hypothesis(rs: RootSystem, p: int) -> List[str]:
    """
    Warnings for residue characteristics outside the standing assumptions.

    Returns:
        list of human-readable warnings (empty when p is admissible)
    """
    warnings = []
    family = rs.cartan_type.family
    if not isprime(p):
        warnings.append(f"{p} is not a prime")
    if family in ("B", "C", "F") and p == 2:
        warnings.append(f"p must be odd for type {rs.cartan_type.name}")
    if family == "G" and p <= 3:
        warnings.append(f"p must exceed 3 for type {rs.cartan_type.name}")
    if p < 5:
        warnings.append(f"p = {p} is below the standing assumption p >= 5")
    pairings = set()
    for beta in rs.roots:
        for alpha in rs.roots:
            value = rs.root_pairing(beta, alpha)
            if value:
                pairings.add(abs(int(value)))
    divisible = sorted(v for v in pairings if v % p == 0)
    if divisible:
        warnings.append(f"p = {p} divides the Cartan pairings {divisible}")
    return warnings


@dataclass
class DecompositionSet:
    """All nu with sum_i nu_i beta_i = n gamma."""

    rs: RootSystem
    gamma: Root
    n: int
    solutions: List[Tuple[int, ...]]

    @property
    def violations(self) -> List[Tuple[int, ...]]:
        return [nu for nu in self.solutions if sum(nu) < self.n]

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> Dict:
        witness = self.violations[0] if self.violations else None
        return {
            "schema": 1,
            "cartan_type": self.rs.cartan_type.name,
            "gamma": list(self.gamma),
            "n": self.n,
            "roots": [list(b) for b in self.rs.positive_roots],
            "solutions": [list(nu) for nu in self.solutions],
            "holds": self.holds,
            "counterexample": list(witness) if witness is not None else None,
            "counterexample_sum": sum(witness) if witness is not None else None,
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [{"nu": str(list(nu)), "sum": sum(nu), "ok": sum(nu) >= self.n} for nu in self.solutions]
        return pd.DataFrame(rows, columns=["nu", "sum", "ok"])


def decomposition_enumerate(rs: RootSystem, gamma: Sequence[int], n: int) -> DecompositionSet:
    """
    Enumerate every way of writing n.gamma as a Z_{>=0}-combination of positive roots.

    Raises:
        NotARootError: If gamma is not a positive root
        BoundExceededError: If n exceeds the configured limit
    """
    gamma = tuple(gamma)
    if not rs.is_positive(gamma):
        raise NotARootError(f"{gamma} is not a positive root")
    limit = get_toolkit_config()["decomposition_max_n"]
    if n > limit or n < 1:
        raise BoundExceededError(f"n must lie in 1..{limit}", {"n": n})
    target = tuple(n * c for c in gamma)
    roots = rs.positive_roots
    solutions: List[Tuple[int, ...]] = []

    def extend(index, remaining, exponents):
        if not any(remaining):
            solutions.append(tuple(exponents) + (0,) * (len(roots) - len(exponents)))
            return
        if index == len(roots):
            return
        beta, k = roots[index], 0
        current = remaining
        while all(c >= 0 for c in current):
            extend(index + 1, current, exponents + [k])
            k += 1
            current = tuple(c - b for c, b in zip(current, beta))

    extend(0, target, [])
    solutions.sort(reverse=True)
    result = DecompositionSet(rs, gamma, n, solutions)
    if not result.holds:
        logger.info(f"{rs.cartan_type.name}: {n}*{gamma} has decompositions with fewer than {n} roots")
    return result


def _generator_index(rs: RootSystem, root: Sequence[int]) -> Tuple[bool, int]:
    root = tuple(root)
    if rs.is_positive(root):
        return True, rs.index(root)
    negated = tuple(-c for c in root)
    if rs.is_positive(negated):
        return False, rs.index(negated)
    raise NotARootError(f"{root} is not a root")


def _vanishes_in_simple_quotient(window: VermaWindow, drop: Drop, monomial) -> bool:
    gram = window.gram(drop)
    column = window.position(drop, monomial)
    return all(row[column] == 0 for row in gram)


def in_parabolic(rs: RootSystem, weight: Weight, root: Sequence[int]) -> bool:
    """Whether the Chevalley generator for root lies in p_{I(lambda)}."""
    positive, index = _generator_index(rs, root)
    if positive:
        return True
    return rs.support(rs.positive_roots[index]) <= max_parabolic_for(rs, weight).indices


@dataclass
class FinitenessProbe:
    root: Root
    N: int
    dims: List[int]
    locally_finite: Optional[bool]
    predicted: bool

    @property
    def verdict(self) -> str:
        if self.locally_finite is None:
            return "undetermined within window"
        return "locally finite" if self.locally_finite else "not locally finite"

    @property
    def agrees(self) -> Optional[bool]:
        if self.locally_finite is None:
            return None
        return self.locally_finite == self.predicted

    def to_json(self) -> Dict:
        return {
            "root": list(self.root),
            "N": self.N,
            "span_dims": self.dims,
            "locally_finite": self.locally_finite,
            "verdict": self.verdict,
            "predicted": self.predicted,
            "agrees": self.agrees,
        }


def finiteness_order(rs: RootSystem, weight: Weight, gamma: Sequence[int]) -> int:
    """
    Number of powers of y_gamma after which a locally finite action must have shown.

    If y_gamma^m v+ = 0 in L(lambda) for some m, the sl2 for gamma acts on v+
    through a finite-dimensional module, so <lambda, gamma^vee> = k >= 0 and
    already y_gamma^(k+1) v+ = 0.
    """
    return int(abs(rs.coroot_pairing(weight, gamma))) + 1


def locally_finite_probe(
    rs: RootSystem, weight: Weight, root: Sequence[int], N: Optional[int] = None, depth: Optional[int] = None
) -> FinitenessProbe:
    """
    dim span{g^j v+ : j <= N} in L(lambda) for the Chevalley generator g of a root.

    Raising generators kill v+; for y_gamma the span grows by one exactly while
    y_gamma^j v+ survives in the simple quotient. N is raised to
    finiteness_order so that a locally finite y_gamma is always seen to
    stabilize. The window is capped by depth (default: the configured maximum);
    when it cannot hold N powers, a span that is still growing is reported as
    undetermined rather than infinite.
    """
    root = tuple(root)
    positive, index = _generator_index(rs, root)
    predicted = in_parabolic(rs, weight, root)
    if positive:
        N = 1 if N is None else N
        return FinitenessProbe(root, N, [1] * (N + 1), True, predicted)
    gamma = rs.positive_roots[index]
    N = max(N or 0, finiteness_order(rs, weight, gamma))
    height = sum(gamma)
    cap = get_toolkit_config()["max_depth"] if depth is None else depth
    depth = max(0, min(N * height, cap))
    reach = depth // height
    window = VermaWindow(rs, weight, depth)
    dims, current = [], 0
    for j in range(reach + 1):
        drop = tuple(j * c for c in gamma)
        if current == j and not _vanishes_in_simple_quotient(window, drop, (index,) * j):
            current += 1
        dims.append(current)
    if dims[-1] < reach + 1:
        locally_finite = True
    elif reach >= N:
        locally_finite = False
    else:
        locally_finite = None
        logger.info(f"y{gamma} on L{weight}: {reach} of {N} powers fit in depth {depth}; undetermined")
    result = FinitenessProbe(root, N, dims, locally_finite, predicted)
    if result.agrees is False:
        logger.warning(f"Finiteness of y{gamma} on L{weight} disagrees with p_I(lambda) within depth {depth}")
    return result


@dataclass
class InjectivityReport:
    gamma: Root
    levels: List[Tuple[Drop, int, int]]
    hypothesis_holds: bool

    @property
    def injective(self) -> bool:
        return all(source == image for _, source, image in self.levels)

    @property
    def first_failure(self) -> Optional[Drop]:
        for drop, source, image in self.levels:
            if source != image:
                return drop
        return None

    def to_json(self) -> Dict:
        failure = self.first_failure
        return {
            "gamma": list(self.gamma),
            "injective": self.injective,
            "hypothesis_holds": self.hypothesis_holds,
            "levels": [[list(d), s, i] for d, s, i in self.levels],
            "first_failure": list(failure) if failure is not None else None,
        }


def injectivity_probe(rs: RootSystem, weight: Weight, gamma: Sequence[int], depth: int) -> InjectivityReport:
    """
    Rank test for y_gamma : L(lambda)_mu -> L(lambda)_{mu - gamma} on every level with headroom.

    The induced map is injective iff rank(G_{mu+gamma} Y) = rank(G_mu).
    """
    gamma = tuple(gamma)
    if not rs.is_positive(gamma):
        raise NotARootError(f"{gamma} is not a positive root")
    hypothesis = not rs.support(gamma) <= max_parabolic_for(rs, weight).indices
    if not hypothesis:
        logger.warning(f"y{gamma} lies in the Levi of I({weight}); injectivity is not expected")
    window = VermaWindow(rs, weight, depth)
    index = rs.index(gamma)
    levels = []
    for drop in window_drops(rs.rank, depth - sum(gamma)):
        target = tuple(a + b for a, b in zip(drop, gamma))
        lowered = linalg.matmul(window.gram(target), window.lower_matrix(index, drop))
        levels.append((drop, window.simple_dim(drop), linalg.rank(lowered)))
    return InjectivityReport(gamma, levels, hypothesis)


def ladder_coefficient(rs: RootSystem, alpha: Sequence[int], gamma: Sequence[int], k: int) -> Optional[Fraction]:
    """
    c with ad(x_alpha)^k (y_gamma) = k! c y_{gamma - k alpha}; None when gamma - k alpha is not a root.
    """
    alpha, current = tuple(alpha), tuple(-c for c in gamma)
    chevalley = rs.chevalley
    product = 1
    for _ in range(k):
        n = chevalley.N(alpha, current)
        if n == 0:
            return None
        product *= n
        current = tuple(a + c for a, c in zip(alpha, current))
    return Fraction(product, factorial(k))


def lemma_pairs(rs: RootSystem) -> List[Tuple[Root, Root]]:
    """(beta, gamma) with gamma - beta a positive root and gamma - 2 beta not a root."""
    pairs = []
    for beta in rs.positive_roots:
        for gamma in rs.positive_roots:
            diff = tuple(g - b for g, b in zip(gamma, beta))
            twice = tuple(g - 2 * b for g, b in zip(gamma, beta))
            if rs.is_positive(diff) and not rs.is_root(twice) and any(twice):
                pairs.append((beta, gamma))
    return pairs


def power_commutator_check(rs: RootSystem, weight: Weight, beta: Sequence[int], gamma: Sequence[int], n: int) -> bool:
    """x_beta^n y_gamma^n v+ == n! [x_beta, y_gamma]^n v+ inside M(lambda)."""
    beta, gamma = tuple(beta), tuple(gamma)
    diff = tuple(g - b for g, b in zip(gamma, beta))
    window = VermaWindow(rs, weight, n * sum(gamma))
    vector = {(rs.index(gamma),) * n: Fraction(1)}
    for _ in range(n):
        vector = window.apply_raise(rs.index(beta), vector)
    coefficient = rs.chevalley.N(beta, tuple(-c for c in gamma))
    expected = {(rs.index(diff),) * n: Fraction(factorial(n) * coefficient ** n)} if coefficient else {}
    return vector == expected


def height_one_check(rs: RootSystem, weight: Weight, gamma: Sequence[int], n: int) -> bool:
    """x_gamma^n y_gamma^n v+ = n! prod_{i<n}(<lambda, gamma^vee> - i) v+."""
    gamma = tuple(gamma)
    window = VermaWindow(rs, weight, n * sum(gamma))
    vector = {(rs.index(gamma),) * n: Fraction(1)}
    for _ in range(n):
        vector = window.apply_raise(rs.index(gamma), vector)
    pairing = rs.coroot_pairing(weight, gamma)
    expected = height_one_coefficient(pairing, n)
    return vector == ({(): expected} if expected else {})


@dataclass
class RelationAudit:
    """Affine space of expressions y_gamma^n v+ = sum c_nu y^nu v+ in L(lambda)."""

    rs: RootSystem
    weight: Weight
    gamma: Root
    n: int
    p: int
    basis: List[PBWMonomial]
    base_point: List[Fraction]
    homogeneous: List[Tuple[Fraction, ...]]
    good_set: List[int]
    verdict: bool
    witness: Optional[Dict] = None
    counter_witness: Optional[List[Fraction]] = None
    warnings: List[str] = field(default_factory=list)

    @property
    def solution_space_dim(self) -> int:
        return len(self.homogeneous)

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "type": self.rs.cartan_type.name,
            "lambda": self.weight.to_json(),
            "gamma": list(self.gamma),
            "n": self.n,
            "p": self.p,
            "verdict": self.verdict,
            "witness": self.witness,
            "counter_witness": [str(c) for c in self.counter_witness] if self.counter_witness is not None else None,
            "solution_space_dim": self.solution_space_dim,
            "basis": [m.label() for m in self.basis],
            "good_set": [self.basis[k].label() for k in self.good_set],
            "warnings": self.warnings,
        }


def relation_coefficient_audit(
    rs: RootSystem, weight: Weight, gamma: Sequence[int], n: int, p: Optional[int] = None, depth: Optional[int] = None
) -> RelationAudit:
    """
    Decide whether every expression of y_gamma^n v+ in L(lambda) has a coefficient
    c_nu with nu_1 + ... + nu_r >= n and |c_nu|_p >= 1.

    The expressions form c = e + ker G (e the indicator of y_gamma^n); the
    verdict is False exactly when some point has every good coordinate in p.Z_(p),
    which is decided over Z_(p) via a Smith decomposition.

    Raises:
        WeightError: If lambda is not integral or gamma lies in the Levi of I(lambda)
        WindowTooShallowError: If depth < n * ht(gamma)
    """
    gamma = tuple(gamma)
    p = get_toolkit_config()["default_prime"] if p is None else p
    warnings = prime_hypothesis(rs, p)
    for message in warnings:
        logger.warning(message)
    if not is_integral(rs, weight):
        raise WeightError(f"{weight} is not integral")
    if not rs.is_positive(gamma):
        raise NotARootError(f"{gamma} is not a positive root")
    if rs.support(gamma) <= max_parabolic_for(rs, weight).indices:
        raise WeightError(f"{gamma} is a root of the Levi of I({weight})", {"gamma": list(gamma)})
    needed = n * sum(gamma)
    depth = needed if depth is None else depth
    if depth < needed:
        raise WindowTooShallowError(f"Audit needs depth {needed}, window has {depth}")

    window = VermaWindow(rs, weight, depth)
    drop = tuple(n * c for c in gamma)
    basis = window.basis(drop)
    gram = window.gram(drop)
    size = len(basis)
    base_index = window.position(drop, (rs.index(gamma),) * n)
    base = [Fraction(int(k == base_index)) for k in range(size)]
    kernel = linalg.nullspace(gram, size)
    good = [k for k, m in enumerate(basis) if len(m) >= n]

    restricted = [[v[k] for k in good] for v in kernel]
    lattice = linalg.integer_column_basis(restricted) if restricted else []
    hit, shift = linalg.p_local_coset_hits_zero(lattice, [int(base[k]) for k in good], p)
    pbw = window.pbw_basis(drop)

    if hit:
        rows = [[v[k] for v in kernel] for k in good]
        t = linalg.solve(rows, shift, len(kernel)) if kernel else []
        point = [base[i] + sum((t[j] * kernel[j][i] for j in range(len(kernel))), Fraction(0)) for i in range(size)]
        logger.warning(f"Coefficient bound fails for {weight}, gamma={gamma}, n={n}, p={p}")
        return RelationAudit(rs, weight, gamma, n, p, pbw, base, kernel, good, False, None, point, warnings)

    witness = {"nu": list(pbw[base_index].exponents), "coefficient": "1", "degree": n}
    logger.info(f"Coefficient audit passed for {weight}, gamma={gamma}, n={n}, p={p} (dim {len(kernel)})")
    return RelationAudit(rs, weight, gamma, n, p, pbw, base, kernel, good, True, witness, None, warnings)
