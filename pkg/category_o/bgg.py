"""
BGG resolutions as graded label objects.

Differentials are not represented; the Euler characteristic check is the
computable shadow of exactness.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import pandas as pd

from .characters import CharacterWindow, freudenthal_char, kostant_count, parabolic_verma_char, window_drops
from .errors import WeightError
from .roots import Drop, RootSystem, Weight
from .weyl import ParabolicSubset, WeylElement, dot_action, min_coset_reps

logger = logging.getLogger(__name__)

VERMA = "Verma"


@dataclass(frozen=True)
class Summand:
    element: WeylElement
    weight: Weight
    module: str

    def label(self) -> str:
        prefix = "M" if self.module == VERMA else "M_I"
        return f"{prefix}{self.weight}"

    def to_json(self) -> Dict:
        return {"word": list(self.element.word), "weight": self.weight.to_json(), "module": self.module}


@dataclass
class ResolutionTerm:
    degree: int
    summands: List[Summand] = field(default_factory=list)

    def to_json(self) -> Dict:
        return {"degree": self.degree, "summands": [s.to_json() for s in self.summands]}


@dataclass
class Resolution:
    """0 -> C_N -> ... -> C_0 -> V(lambda) -> 0 with C_k = sum over l(w) = k."""

    rs: RootSystem
    weight: Weight
    parabolic: ParabolicSubset
    terms: List[ResolutionTerm]
    augmentation: str = "V(lambda)"

    def summand_counts(self) -> List[int]:
        return [len(t.summands) for t in self.terms]

    def duplicate_weights(self) -> List[Weight]:
        counts = Counter(s.weight for t in self.terms for s in t.summands)
        return [w for w, c in counts.items() if c > 1]

    def display(self) -> str:
        parts = ["0"]
        for term in reversed(self.terms):
            parts.append(" + ".join(s.label() for s in term.summands))
        parts.extend([f"V{self.weight}", "0"])
        return " -> ".join(parts)

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "cartan_type": self.rs.cartan_type.name,
            "lambda": self.weight.to_json(),
            "I": self.parabolic.to_json(),
            "terms": [t.to_json() for t in self.terms],
            "augmentation": self.augmentation,
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {"degree": t.degree, "word": s.element.word_label(), "module": s.label()}
            for t in self.terms
            for s in t.summands
        ]
        return pd.DataFrame(rows, columns=["degree", "word", "module"])


def parabolic_bgg_resolution(rs: RootSystem, parabolic: ParabolicSubset, weight: Weight) -> Resolution:
    """
    Lepowsky's resolution: degree k is the sum of M_I(w.lambda) over w in ^I W with l(w) = k.

    Raises:
        WeightError: If lambda is not dominant integral
    """
    if not rs.is_dominant(weight):
        raise WeightError(f"BGG resolutions need a dominant integral weight, got {weight}")
    cosets = min_coset_reps(rs, parabolic)
    module = VERMA if parabolic.is_borel else f"ParabolicVerma({','.join(map(str, parabolic.to_json()))})"
    top = cosets.max_rep.length
    terms = [ResolutionTerm(k) for k in range(top + 1)]
    for w in cosets.reps:
        terms[w.length].summands.append(Summand(w, dot_action(w, weight), module))
    resolution = Resolution(rs, weight, parabolic, terms, f"V{weight}")
    duplicates = resolution.duplicate_weights()
    if duplicates:
        logger.warning(f"Resolution of {weight} repeats dot-weights {[str(w) for w in duplicates]}")
    logger.info(f"Enumerated BGG resolution of V{weight} over I={parabolic.to_json()}: counts {resolution.summand_counts()}")
    return resolution


def bgg_resolution(rs: RootSystem, weight: Weight) -> Resolution:
    return parabolic_bgg_resolution(rs, ParabolicSubset.borel(rs.rank), weight)


@dataclass(frozen=True)
class InductionLabel:
    """Ind^G_{P_I}(V_I(mu)')."""

    parabolic: ParabolicSubset
    weight: Weight
    element: WeylElement

    def label(self, rs: RootSystem) -> str:
        base = self.parabolic.label(rs.cartan_type.reductive_gl)
        if self.parabolic.is_borel:
            inner = "K" if not any(self.weight.coords) else f"{self.weight}^-1"
        else:
            inner = f"V_I{self.weight}'"
        return f"Ind^G_{base}({inner})"


@dataclass
class DualResolutionLabel:
    """0 <- Ind(C_N') <- ... <- Ind(C_0') <- V(lambda) (x) i^G_P <- 0."""

    rs: RootSystem
    weight: Weight
    parabolic: ParabolicSubset
    terms: List[List[InductionLabel]]

    @property
    def augmentation(self) -> str:
        base = self.parabolic.label(self.rs.cartan_type.reductive_gl)
        if not any(self.weight.coords):
            return f"i^G_{base}(K)"
        return f"V{self.weight} (x) i^G_{base}"

    def display(self) -> str:
        parts = ["0"]
        for term in reversed(self.terms):
            parts.append(" + ".join(label.label(self.rs) for label in term))
        parts.extend([self.augmentation, "0"])
        return " <- ".join(parts)

    def to_resolution(self) -> Resolution:
        """Undo the labelling: the graded object it was produced from."""
        module = VERMA if self.parabolic.is_borel else f"ParabolicVerma({','.join(map(str, self.parabolic.to_json()))})"
        terms = [
            ResolutionTerm(k, [Summand(label.element, label.weight, module) for label in term])
            for k, term in enumerate(self.terms)
        ]
        return Resolution(self.rs, self.weight, self.parabolic, terms, f"V{self.weight}")

    def to_json(self) -> Dict:
        return {
            "schema": 1,
            "lambda": self.weight.to_json(),
            "I": self.parabolic.to_json(),
            "terms": [
                {"degree": k, "labels": [label.label(self.rs) for label in term]} for k, term in enumerate(self.terms)
            ],
            "augmentation": self.augmentation,
        }


def dualize(resolution: Resolution) -> DualResolutionLabel:
    terms = [
        [InductionLabel(resolution.parabolic, s.weight, s.element) for s in term.summands]
        for term in resolution.terms
    ]
    return DualResolutionLabel(resolution.rs, resolution.weight, resolution.parabolic, terms)


def dual_la_resolution(rs: RootSystem, parabolic: ParabolicSubset, weight: Weight) -> DualResolutionLabel:
    """Locally analytic dual of the parabolic resolution, term by term."""
    return dualize(parabolic_bgg_resolution(rs, parabolic, weight))


@dataclass
class EulerReport:
    passed: bool
    depth: int
    residuals: Dict[Drop, int]
    offending_weight: Optional[Weight] = None

    def to_json(self) -> Dict:
        return {
            "passed": self.passed,
            "depth": self.depth,
            "residuals": [[list(d), r] for d, r in sorted(self.residuals.items()) if r],
            "offending_weight": self.offending_weight.to_json() if self.offending_weight else None,
        }


def euler_check(resolution: Resolution, depth: int) -> EulerReport:
    """
    Compare sum_k (-1)^k char(C_k) with char V(lambda) at every drop of height <= depth.
    """
    rs = resolution.rs
    target = freudenthal_char(rs, resolution.weight, depth)
    totals: Dict[Drop, int] = {d: 0 for d in window_drops(rs.rank, depth)}
    for term in resolution.terms:
        sign = -1 if term.degree % 2 else 1
        for summand in term.summands:
            shift = tuple(int(c) for c in rs.drop_between(resolution.weight, summand.weight))
            remaining = depth - sum(shift)
            if remaining < 0:
                continue
            if summand.module == VERMA:
                module = CharacterWindow(
                    summand.weight, remaining, {d: kostant_count(rs, d) for d in window_drops(rs.rank, remaining)}
                )
            else:
                module = parabolic_verma_char(rs, resolution.parabolic, summand.weight, remaining)
            for inner, value in module.dims.items():
                totals[tuple(a + b for a, b in zip(shift, inner))] += sign * value
    residuals = {d: totals[d] - target[d] for d in totals}
    offending = None
    for drop in window_drops(rs.rank, depth):
        if residuals[drop]:
            offending = rs.subtract_drop(resolution.weight, drop)
            logger.warning(f"Euler check fails at {offending}: residual {residuals[drop]}")
            break
    return EulerReport(offending is None, depth, residuals, offending)
