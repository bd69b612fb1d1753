"""
Report builders behind the command-line subcommands.

Each builder returns a Report: a JSON-ready document plus the pandas tables
shown by ``--format table``. Documents contain no timestamps or paths, so
equal inputs give byte-identical output.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from category_o.bgg import dualize, euler_check, parabolic_bgg_resolution
from category_o.cache import load_or_build_window
from category_o.characters import window_drops
from category_o.drinfeld import (
    LineBundleSpec,
    filtration_report,
    verify_local_cohomology,
    weight_table,
    weight_table_frame,
)
from category_o.errors import WeightError
from category_o.free_algebra import commutator_expansion_check
from category_o.jh_labels import SmoothLabel, irreducibility_test, jh_series
from category_o.relations import (
    decomposition_enumerate,
    height_one_check,
    injectivity_probe,
    ladder_coefficient,
    lemma_pairs,
    locally_finite_probe,
    power_commutator_check,
    prime_hypothesis,
    relation_coefficient_audit,
)
from category_o.roots import RootSystem, Weight
from category_o.verma import PBWMonomial, jh_verma_bruteforce
from category_o.weyl import (
    ParabolicSubset,
    in_category_o_p,
    is_integral,
    linkage_class,
    max_parabolic_for,
    min_coset_reps,
    weyl_order,
)
from category_o_settings import get_default_depth, get_default_prime, get_toolkit_config

logger = logging.getLogger(__name__)

AUDIT_MODES = ("abcd", "coefficients", "commutator", "finiteness", "injectivity")


@dataclass
class Report:
    document: Dict
    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)

    def render_tables(self) -> str:
        blocks = []
        for title, frame in self.tables.items():
            body = frame.to_string(index=False) if not frame.empty else "(empty)"
            blocks.append(f"{title}\n{body}")
        return "\n\n".join(blocks)


def _vector_json(vector, size: int) -> List[List[str]]:
    return [[PBWMonomial.from_indices(m, size).label(), str(c)] for m, c in sorted(vector.items())]


def rootsys_report(rs: RootSystem) -> Report:
    """Root data and Chevalley structure constants."""
    document = rs.to_json()
    document["chevalley"] = rs.chevalley.to_json()
    frame = pd.DataFrame(
        [{"index": k + 1, "root": str(list(b)), "height": sum(b)} for k, b in enumerate(rs.positive_roots)],
        columns=["index", "root", "height"],
    )
    return Report(document, {"positive roots": frame})


def weyl_report(rs: RootSystem, parabolic: ParabolicSubset, weight: Optional[Weight] = None) -> Report:
    """Minimal coset representatives for W_I, with dot-translates of an optional weight."""
    cosets = min_coset_reps(rs, parabolic)
    document = cosets.to_json()
    document["cartan_type"] = rs.cartan_type.name
    document["weyl_order"] = weyl_order(rs)
    if weight is not None:
        rs.check_weight(weight)
        document["lambda"] = weight.to_json()
        document["integral"] = is_integral(rs, weight)
        document["in_category"] = in_category_o_p(rs, weight, parabolic)
        document["linkage"] = [
            {
                "word": list(entry.element.word),
                "weight": entry.weight.to_json(),
                "drop": [str(c) for c in entry.drop] if entry.drop is not None else None,
            }
            for entry in linkage_class(rs, weight)
        ]
    return Report(document, {"coset representatives": cosets.to_frame(weight)})


def verma_report(
    rs: RootSystem, weight: Weight, depth: Optional[int] = None, cache_dir: Optional[str] = None, with_jh: bool = False
) -> Report:
    """
    Dimensions of M(lambda) and L(lambda) on a window, singular vectors and,
    optionally, the brute-force composition factors.
    """
    depth = get_default_depth(rs.rank) if depth is None else depth
    window = load_or_build_window(rs, weight, depth, cache_dir)
    size = len(rs.positive_roots)
    levels, rows = [], []
    for drop in window_drops(rs.rank, depth):
        verma_dim = len(window.basis(drop))
        simple_dim = window.simple_dim(drop)
        singular = window.singular_vectors(drop) if any(drop) else []
        levels.append({
            "drop": list(drop),
            "verma_dim": verma_dim,
            "simple_dim": simple_dim,
            "singular_vectors": [_vector_json(v, size) for v in singular],
        })
        rows.append({
            "drop": str(list(drop)),
            "weight": str(rs.subtract_drop(weight, drop)),
            "verma_dim": verma_dim,
            "simple_dim": simple_dim,
            "singular": len(singular),
        })
    document = {
        "schema": 1,
        "cartan_type": rs.cartan_type.name,
        "lambda": weight.to_json(),
        "depth": depth,
        "levels": levels,
    }
    tables = {"weight spaces": pd.DataFrame(rows, columns=["drop", "weight", "verma_dim", "simple_dim", "singular"])}
    if with_jh:
        factors = jh_verma_bruteforce(rs, weight, depth)
        document["jh_factors"] = [f.to_json() for f in factors]
        tables["composition factors"] = pd.DataFrame(
            [{"mu": str(f.weight), "drop": str(list(f.drop)), "multiplicity": f.multiplicity} for f in factors],
            columns=["mu", "drop", "multiplicity"],
        )
    return Report(document, tables)


def bgg_report(rs: RootSystem, weight: Weight, parabolic: ParabolicSubset, depth: Optional[int] = None) -> Report:
    """Parabolic BGG resolution, its locally analytic dual and the Euler characteristic check."""
    depth = get_default_depth(rs.rank) if depth is None else depth
    resolution = parabolic_bgg_resolution(rs, parabolic, weight)
    dual = dualize(resolution)
    euler = euler_check(resolution, depth)
    document = resolution.to_json()
    document["display"] = resolution.display()
    document["dual"] = dual.to_json()
    document["dual"]["display"] = dual.display()
    document["euler"] = euler.to_json()
    return Report(document, {"resolution": resolution.to_frame()})


def _linked_depth(rs: RootSystem, weight: Weight) -> int:
    heights = [0]
    for entry in linkage_class(rs, weight):
        if entry.drop is not None and all(c.denominator == 1 and c >= 0 for c in entry.drop):
            heights.append(int(sum(entry.drop)))
    return max(heights)


def jh_report(
    rs: RootSystem,
    verma_weight: Weight,
    parabolic: ParabolicSubset,
    smooth: SmoothLabel,
    depth: Optional[int] = None,
    p: Optional[int] = None,
) -> Report:
    """
    Constituents of F^G_P(M(lambda), V), from the composition factors of M(lambda).

    The window defaults to the smallest depth holding every linked weight.
    """
    depth = _linked_depth(rs, verma_weight) if depth is None else depth
    p = get_default_prime() if p is None else p
    factors = jh_verma_bruteforce(rs, verma_weight, depth)
    ordered = [f.weight for f in factors for _ in range(f.multiplicity)]
    series = jh_series(rs, ordered, smooth, parabolic)
    verdicts = []
    for f in factors:
        verdict = irreducibility_test(rs, f.weight, smooth, parabolic, p)
        verdicts.append({"mu": f.weight.to_json(), **verdict.to_json()})
    document = series.to_json()
    document["cartan_type"] = rs.cartan_type.name
    document["lambda"] = verma_weight.to_json()
    document["p"] = p
    document["irreducibility"] = verdicts
    document["display"] = [c.text(rs.cartan_type.reductive_gl) for c in series.constituents]
    return Report(document, {"constituents": series.to_frame()})


def drinfeld_report(d: int, r: int, s: int, height: int = 4) -> Report:
    """Bott data, weight chain, filtration and local cohomology checks for L_lambda on P^d."""
    spec = LineBundleSpec(d, r, s)
    rows = weight_table(spec)
    report = filtration_report(spec)
    checks = [verify_local_cohomology(spec, i, height) for i in range(1, d + 1)]
    document = report.to_json()
    document["weights"] = [
        {"i": row.i, "weight": row.weight.to_json(), "vs_next": row.relation_to_next} for row in rows
    ]
    document["local_cohomology"] = [c.to_json() for c in checks]
    document["i0"] = report.bott.i0
    document["h_dim"] = report.bott.h_dim
    checks_frame = pd.DataFrame(
        [{"i": c.i, "mu": str(c.mu), "window": c.window_size, "passed": c.passed} for c in checks],
        columns=["i", "mu", "window", "passed"],
    )
    return Report(
        document,
        {"weights": weight_table_frame(rows), "filtration": report.to_frame(), "local cohomology": checks_frame},
    )


def _gammas(rs: RootSystem, gamma: Optional[Sequence[int]]) -> List[Tuple[int, ...]]:
    return [tuple(gamma)] if gamma is not None else list(rs.positive_roots)


def _outside_levi(rs: RootSystem, weight: Weight, gammas: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    levi = max_parabolic_for(rs, weight).indices
    return [g for g in gammas if not rs.support(g) <= levi]


def audit_abcd(rs: RootSystem, n: int, gamma: Optional[Sequence[int]] = None) -> Report:
    """Decompositions of n.gamma into positive roots, for one gamma or all of them."""
    sets = [decomposition_enumerate(rs, g, n) for g in _gammas(rs, gamma)]
    counterexamples = [s.to_json() for s in sets if not s.holds]
    document = {
        "schema": 1,
        "mode": "abcd",
        "cartan_type": rs.cartan_type.name,
        "n": n,
        "holds": not counterexamples,
        "results": [s.to_json() for s in sets],
        "counterexamples": counterexamples,
    }
    frame = pd.DataFrame(
        [
            {"gamma": str(list(s.gamma)), "solutions": len(s.solutions), "violations": len(s.violations)}
            for s in sets
        ],
        columns=["gamma", "solutions", "violations"],
    )
    return Report(document, {"decompositions": frame})


def audit_coefficients(
    rs: RootSystem, weight: Weight, n: int, gamma: Optional[Sequence[int]] = None, p: Optional[int] = None
) -> Report:
    """Coefficient bound for y_gamma^n v+ in L(lambda), with the ladder constants of gamma."""
    p = get_default_prime() if p is None else p
    gammas = _outside_levi(rs, weight, _gammas(rs, gamma))
    if not gammas:
        raise WeightError(f"Every positive root lies in the Levi of I({weight})")
    audits, rows = [], []
    for g in gammas:
        audit = relation_coefficient_audit(rs, weight, g, n, p)
        entry = audit.to_json()
        entry["height_one"] = height_one_check(rs, weight, g, n)
        entry["ladder"] = []
        for alpha in rs.positive_roots:
            for k in range(1, n + 1):
                c = ladder_coefficient(rs, alpha, g, k)
                if c is not None:
                    entry["ladder"].append({"alpha": list(alpha), "k": k, "c": str(c), "unit": c.numerator % p != 0})
        audits.append(entry)
        rows.append({
            "gamma": str(list(g)),
            "verdict": audit.verdict,
            "solution_dim": audit.solution_space_dim,
            "height_one": entry["height_one"],
        })
    document = {
        "schema": 1,
        "mode": "coefficients",
        "cartan_type": rs.cartan_type.name,
        "lambda": weight.to_json(),
        "n": n,
        "p": p,
        "warnings": prime_hypothesis(rs, p),
        "audits": audits,
    }
    return Report(document, {"coefficient audits": pd.DataFrame(rows, columns=["gamma", "verdict", "solution_dim", "height_one"])})


def audit_commutator(rs: RootSystem, weight: Weight, k: int, n: int) -> Report:
    """Free-algebra commutator expansions and x_beta^n y_gamma^n v+ on the root pairs that need it."""
    free = [commutator_expansion_check(k, m) for m in range(1, n + 1)]
    rows, checks = [], []
    for beta, gamma in lemma_pairs(rs):
        if n * sum(gamma) > get_toolkit_config()["max_depth"]:
            logger.debug(f"Skipping pair {beta}, {gamma}: window too deep for n={n}")
            continue
        ok = power_commutator_check(rs, weight, beta, gamma, n)
        checks.append({"beta": list(beta), "gamma": list(gamma), "holds": ok})
        rows.append({"beta": str(list(beta)), "gamma": str(list(gamma)), "holds": ok})
    document = {
        "schema": 1,
        "mode": "commutator",
        "cartan_type": rs.cartan_type.name,
        "lambda": weight.to_json(),
        "k": k,
        "n": n,
        "free_algebra": [{"n": m, "holds": ok} for m, ok in enumerate(free, start=1)],
        "pairs": checks,
        "holds": all(free) and all(c["holds"] for c in checks),
    }
    return Report(document, {"root pairs": pd.DataFrame(rows, columns=["beta", "gamma", "holds"])})


def audit_finiteness(
    rs: RootSystem, weight: Weight, n: Optional[int] = None, gamma: Optional[Sequence[int]] = None, depth: Optional[int] = None
) -> Report:
    """Local finiteness of x_gamma and y_gamma on L(lambda) against p_I(lambda)."""
    probes = []
    for g in _gammas(rs, gamma):
        for root in (g, tuple(-c for c in g)):
            probes.append(locally_finite_probe(rs, weight, root, n, depth))
    undetermined = [p for p in probes if p.locally_finite is None]
    if undetermined:
        logger.warning(f"{len(undetermined)} probe(s) undetermined within the window; raise --depth or CATEGORY_O_MAX_DEPTH")
    document = {
        "schema": 1,
        "mode": "finiteness",
        "cartan_type": rs.cartan_type.name,
        "lambda": weight.to_json(),
        "N": n,
        "I": max_parabolic_for(rs, weight).to_json(),
        "probes": [p.to_json() for p in probes],
        "undetermined": len(undetermined),
        "agrees": all(p.agrees is not False for p in probes),
    }
    frame = pd.DataFrame(
        [
            {"root": str(list(p.root)), "N": p.N, "dims": str(p.dims), "verdict": p.verdict, "predicted": p.predicted}
            for p in probes
        ],
        columns=["root", "N", "dims", "verdict", "predicted"],
    )
    return Report(document, {"finiteness": frame})


def audit_injectivity(rs: RootSystem, weight: Weight, depth: Optional[int] = None, gamma: Optional[Sequence[int]] = None) -> Report:
    """Injectivity of y_gamma on L(lambda) for roots outside the Levi of I(lambda)."""
    depth = get_default_depth(rs.rank) if depth is None else depth
    gammas = _outside_levi(rs, weight, _gammas(rs, gamma)) if gamma is None else _gammas(rs, gamma)
    reports = [injectivity_probe(rs, weight, g, depth) for g in gammas if sum(g) <= depth]
    document = {
        "schema": 1,
        "mode": "injectivity",
        "cartan_type": rs.cartan_type.name,
        "lambda": weight.to_json(),
        "depth": depth,
        "reports": [r.to_json() for r in reports],
    }
    frame = pd.DataFrame(
        [
            {"gamma": str(list(r.gamma)), "injective": r.injective, "hypothesis": r.hypothesis_holds, "levels": len(r.levels)}
            for r in reports
        ],
        columns=["gamma", "injective", "hypothesis", "levels"],
    )
    return Report(document, {"injectivity": frame})
