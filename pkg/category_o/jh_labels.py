"""
Jordan-Hölder labels for F^G_P(M, V).

Each composition factor L(mu_i) of M contributes the constituents of the
smooth induction from P to Q_i = max_parabolic_for(mu_i); for trivial V these
are the generalized Steinberg representations v^{Q_i}_J with P <= J <= Q_i,
each with multiplicity one.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from .errors import ParabolicError
from .relations import prime_hypothesis
from .roots import RootSystem, Weight
from .weyl import ParabolicSubset, max_parabolic_for

logger = logging.getLogger(__name__)

TRIVIAL = "trivial"
STEINBERG = "steinberg"
OPAQUE = "opaque"
INDUCTION = "induction"


@dataclass(frozen=True)
class SmoothLabel:
    """A smooth representation of a Levi factor, known only by its label."""

    kind: str
    ambient: Optional[ParabolicSubset] = None
    parabolic: Optional[ParabolicSubset] = None
    name: str = ""
    asserted_irreducible: bool = False
    inner: Optional["SmoothLabel"] = None
    factors: Tuple["SmoothLabel", ...] = ()

    @classmethod
    def trivial(cls, ambient: Optional[ParabolicSubset] = None) -> "SmoothLabel":
        return cls(TRIVIAL, ambient=ambient)

    @classmethod
    def steinberg(cls, ambient: ParabolicSubset, parabolic: ParabolicSubset) -> "SmoothLabel":
        """v^{ambient}_{parabolic}; the trivial representation when both agree."""
        if not parabolic <= ambient:
            raise ParabolicError(f"{parabolic.label()} is not contained in {ambient.label()}")
        if parabolic == ambient:
            return cls.trivial(ambient)
        return cls(STEINBERG, ambient=ambient, parabolic=parabolic)

    @classmethod
    def opaque(cls, name: str, asserted_irreducible: bool = False, factors: Sequence["SmoothLabel"] = ()) -> "SmoothLabel":
        return cls(OPAQUE, name=name, asserted_irreducible=asserted_irreducible, factors=tuple(factors))

    @classmethod
    def induction(cls, source: ParabolicSubset, target: ParabolicSubset, inner: "SmoothLabel") -> "SmoothLabel":
        """i^{L_target}_{source}(inner)."""
        if source == target:
            return inner
        return cls(INDUCTION, ambient=target, parabolic=source, inner=inner)

    @classmethod
    def parse(cls, text: str) -> "SmoothLabel":
        """``trivial`` or ``opaque:NAME`` / ``opaque:NAME:irreducible``."""
        text = (text or TRIVIAL).strip()
        if text.lower() == TRIVIAL:
            return cls.trivial()
        parts = text.split(":")
        if parts[0].lower() == OPAQUE and len(parts) >= 2 and parts[1]:
            return cls.opaque(parts[1], len(parts) > 2 and parts[2].lower() == "irreducible")
        raise ParabolicError(f"Cannot parse smooth representation {text!r}")

    @property
    def is_irreducible(self) -> bool:
        if self.kind in (TRIVIAL, STEINBERG):
            return True
        if self.kind == OPAQUE:
            return self.asserted_irreducible
        return False

    def text(self, gl: bool = False) -> str:
        if self.kind == TRIVIAL:
            return "1"
        if self.kind == STEINBERG:
            return f"v^{self.ambient.label(gl)}_{self.parabolic.label(gl)}"
        if self.kind == OPAQUE:
            return self.name
        return f"i^{self.ambient.label(gl)}_{self.parabolic.label(gl)}({self.inner.text(gl)})"

    def to_json(self) -> Dict:
        out = {"kind": self.kind}
        if self.ambient is not None:
            out["ambient"] = self.ambient.to_json()
        if self.parabolic is not None:
            out["parabolic"] = self.parabolic.to_json()
        if self.kind == OPAQUE:
            out["name"] = self.name
            out["asserted_irreducible"] = self.asserted_irreducible
        if self.inner is not None:
            out["inner"] = self.inner.to_json()
        return out


def _refinement_key(label: SmoothLabel):
    indices = label.parabolic.indices if label.kind == STEINBERG else (label.ambient.indices if label.ambient else frozenset())
    return (-len(indices), sorted(indices))


def _between(lower: ParabolicSubset, upper: ParabolicSubset) -> List[ParabolicSubset]:
    free = sorted(upper.indices - lower.indices)
    return [
        ParabolicSubset(lower.indices | frozenset(extra), lower.rank)
        for size in range(len(free) + 1)
        for extra in combinations(free, size)
    ]


def steinberg_constituents(P: ParabolicSubset, Q: ParabolicSubset) -> List[SmoothLabel]:
    """
    Constituents v^Q_J of i^{L_Q}_P(1), one per P <= J <= Q, each with multiplicity one.

    Raises:
        ParabolicError: If P is not contained in Q
    """
    if not P <= Q:
        raise ParabolicError(f"{P.label()} is not contained in {Q.label()}", {"P": P.to_json(), "Q": Q.to_json()})
    labels = [SmoothLabel.steinberg(Q, J) for J in _between(P, Q)]
    return sorted(labels, key=_refinement_key)


@dataclass(frozen=True)
class ConstituentLabel:
    """F^G_Q(L(mu), smooth) sitting at filtration position (index, refinement)."""

    Q: ParabolicSubset
    mu: Weight
    smooth: SmoothLabel
    index: int
    refinement: int
    multiplicity: int = 1
    resolved: bool = True

    def text(self, gl: bool = False) -> str:
        return f"F^G_{self.Q.label(gl)}(L{self.mu}, {self.smooth.text(gl)})"

    def key(self) -> Tuple:
        return (tuple(sorted(self.Q.indices)), self.mu, self.smooth)

    def to_json(self) -> Dict:
        return {
            "index": self.index,
            "refinement": self.refinement,
            "Q": self.Q.to_json(),
            "mu": self.mu.to_json(),
            "smooth": self.smooth.to_json(),
            "multiplicity": self.multiplicity,
            "resolved": self.resolved,
        }


@dataclass
class JHSeries:
    P: ParabolicSubset
    V: SmoothLabel
    factors: List[Weight]
    constituents: List[ConstituentLabel] = field(default_factory=list)
    gl: bool = False

    @property
    def total_length(self) -> int:
        return sum(c.multiplicity for c in self.constituents)

    def multiset(self) -> Dict[Tuple, int]:
        counts: Dict[Tuple, int] = {}
        for c in self.constituents:
            counts[c.key()] = counts.get(c.key(), 0) + c.multiplicity
        return counts

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "P": self.P.to_json(),
            "V": self.V.to_json(),
            "factors": [mu.to_json() for mu in self.factors],
            "constituents": [c.to_json() for c in self.constituents],
            "total_length": self.total_length,
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {"index": c.index, "refinement": c.refinement, "Q": c.Q.label(self.gl), "constituent": c.text(self.gl)}
            for c in self.constituents
        ]
        return pd.DataFrame(rows, columns=["index", "refinement", "Q", "constituent"])


def _smooth_refinement(P: ParabolicSubset, Q: ParabolicSubset, V: SmoothLabel) -> Tuple[List[SmoothLabel], bool]:
    """
    Smooth constituents of i^{L_Q}_{P}(V) and whether they are known to be simple.

    Supplied factors of an opaque V are a composition series of V itself. For
    Q = P they are the answer; otherwise each factor is induced to L_Q and
    left unresolved.
    """
    if V.kind == TRIVIAL:
        return steinberg_constituents(P, Q), True
    if P == Q and V.is_irreducible:
        return [V], True
    if V.factors:
        if P == Q:
            return list(V.factors), True
        return [SmoothLabel.induction(P, Q, f) for f in V.factors], False
    return [SmoothLabel.induction(P, Q, V)], False


def jh_series(rs: RootSystem, factors: Sequence[Weight], V: SmoothLabel, P: ParabolicSubset) -> JHSeries:
    """
    Ordered constituent labels of F^G_P(M, V) given the ordered JH factors of M.

    Raises:
        ParabolicError: If P is not contained in some Q_i
    """
    series = JHSeries(P, V, list(factors), gl=rs.cartan_type.reductive_gl)
    for i, mu in enumerate(factors):
        Q = max_parabolic_for(rs, mu)
        if not P <= Q:
            raise ParabolicError(
                f"L{mu} is not in the category for {P.label()}: Q = {Q.label()}",
                {"index": i, "P": P.to_json(), "Q": Q.to_json()},
            )
        smooth, resolved = _smooth_refinement(P, Q, V)
        if not resolved:
            logger.warning(f"Constituents of {V.text()} induced to {Q.label()} are unknown; factor {i} left unresolved")
        for position, label in enumerate(smooth):
            series.constituents.append(ConstituentLabel(Q, mu, label, i, position, 1, resolved))
    logger.debug(f"JH series over {P.label()} has {series.total_length} constituents")
    return series


@dataclass
class IrreducibilityVerdict:
    verdict: str
    Q: ParabolicSubset
    warnings: List[str]

    def to_json(self) -> Dict:
        return {"verdict": self.verdict, "Q": self.Q.to_json(), "warnings": self.warnings}


def irreducibility_test(rs: RootSystem, mu: Weight, V: SmoothLabel, P: ParabolicSubset, p: int) -> IrreducibilityVerdict:
    """
    Decide irreducibility of F^G_P(L(mu), V) where the criterion applies.

    Returns:
        IrreducibilityVerdict: ``irreducible`` when Q(mu) = P and V is irreducible,
        ``reducible`` when Q(mu) strictly contains P and V is trivial,
        ``unknown`` otherwise; warnings list residue-characteristic issues
    """
    warnings = prime_hypothesis(rs, p)
    for message in warnings:
        logger.warning(message)
    Q = max_parabolic_for(rs, mu)
    if not P <= Q:
        raise ParabolicError(f"{P.label()} is not contained in {Q.label()}")
    if Q == P and V.is_irreducible:
        verdict = "irreducible"
    elif P < Q and V.kind == TRIVIAL:
        verdict = "reducible"
    else:
        verdict = "unknown"
    return IrreducibilityVerdict(verdict, Q, warnings)


@dataclass(frozen=True)
class InducedLabel:
    """F^G_base(L(mu), smooth) before refinement."""

    base: ParabolicSubset
    mu: Weight
    smooth: SmoothLabel


def transitivity_rewrite(rs: RootSystem, label: InducedLabel, Q: ParabolicSubset) -> InducedLabel:
    """
    F^G_P(M, V) = F^G_Q(M, i^{L_Q}_P(V)) for P <= Q <= max_parabolic_for(mu).

    Raises:
        ParabolicError: If Q is not between P and the maximal parabolic of mu
    """
    top = max_parabolic_for(rs, label.mu)
    if not (label.base <= Q and Q <= top):
        raise ParabolicError(
            f"Cannot rewrite from {label.base.label()} to {Q.label()} under {top.label()}",
            {"P": label.base.to_json(), "Q": Q.to_json(), "max": top.to_json()},
        )
    if Q == label.base:
        return label
    return InducedLabel(Q, label.mu, SmoothLabel.induction(label.base, Q, label.smooth))


def _induce(constituents: List[ParabolicSubset], source: ParabolicSubset, target: ParabolicSubset) -> List[ParabolicSubset]:
    """i^{L_target}_{source}(v^{source}_J) has the constituents v^{target}_{J + S}, S a subset of target - source."""
    extra = sorted(target.indices - source.indices)
    return [
        ParabolicSubset(J.indices | frozenset(chosen), target.rank)
        for J in constituents
        for size in range(len(extra) + 1)
        for chosen in combinations(extra, size)
    ]


def _levi_constituents(smooth: SmoothLabel, base: ParabolicSubset) -> List[ParabolicSubset]:
    """The J with v^{base}_J among the constituents of a trivial-based smooth label."""
    if smooth.kind == TRIVIAL:
        return [base]
    if smooth.kind == STEINBERG:
        return [smooth.parabolic]
    if smooth.kind == INDUCTION:
        return _induce(_levi_constituents(smooth.inner, smooth.parabolic), smooth.parabolic, base)
    raise ParabolicError(f"Cannot expand smooth label {smooth.text()}")


def expand_label(rs: RootSystem, label: InducedLabel) -> List[ConstituentLabel]:
    """Refine an induced label to Q(mu) and list its Steinberg constituents."""
    top = max_parabolic_for(rs, label.mu)
    found = _induce(_levi_constituents(label.smooth, label.base), label.base, top)
    smooth = sorted((SmoothLabel.steinberg(top, J) for J in found), key=_refinement_key)
    return [ConstituentLabel(top, label.mu, s, 0, k) for k, s in enumerate(smooth)]
