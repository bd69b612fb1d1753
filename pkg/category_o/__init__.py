"""
Exact computations in (parabolic) category O and the locally analytic
representations built from it.
"""

from .bgg import bgg_resolution, dual_la_resolution, euler_check, parabolic_bgg_resolution
from .cache import cache_roundtrip, load_or_build_window
from .characters import freudenthal_char, kostant_count, parabolic_verma_char, verma_char, weyl_dim
from .drinfeld import LineBundleSpec, bott, filtration_report, verify_local_cohomology, weight_table
from .errors import (
    BoundExceededError,
    CacheError,
    CategoryOError,
    ConsistencyError,
    InvalidCartanTypeError,
    NotARootError,
    ParabolicError,
    WeightError,
    WindowTooShallowError,
)
from .free_algebra import commutator_expansion_check
from .jh_labels import SmoothLabel, irreducibility_test, jh_series, steinberg_constituents, transitivity_rewrite
from .relations import (
    decomposition_enumerate,
    finiteness_order,
    injectivity_probe,
    locally_finite_probe,
    prime_hypothesis,
    relation_coefficient_audit,
)
from .roots import CartanType, RootSystem, Weight, chevalley_constants, root_system
from .verma import VermaWindow, build_window, contravariant_gram, jh_verma_bruteforce, simple_weight_dim, singular_vectors
from .weyl import ParabolicSubset, dot_action, generate_weyl, max_parabolic_for, min_coset_reps

__all__ = [
    "BoundExceededError",
    "CacheError",
    "CartanType",
    "CategoryOError",
    "ConsistencyError",
    "InvalidCartanTypeError",
    "LineBundleSpec",
    "NotARootError",
    "ParabolicError",
    "ParabolicSubset",
    "RootSystem",
    "SmoothLabel",
    "VermaWindow",
    "Weight",
    "WeightError",
    "WindowTooShallowError",
    "bgg_resolution",
    "bott",
    "build_window",
    "cache_roundtrip",
    "chevalley_constants",
    "commutator_expansion_check",
    "contravariant_gram",
    "decomposition_enumerate",
    "dot_action",
    "dual_la_resolution",
    "euler_check",
    "filtration_report",
    "finiteness_order",
    "freudenthal_char",
    "generate_weyl",
    "injectivity_probe",
    "irreducibility_test",
    "jh_series",
    "jh_verma_bruteforce",
    "kostant_count",
    "load_or_build_window",
    "locally_finite_probe",
    "max_parabolic_for",
    "min_coset_reps",
    "parabolic_bgg_resolution",
    "parabolic_verma_char",
    "prime_hypothesis",
    "relation_coefficient_audit",
    "root_system",
    "simple_weight_dim",
    "singular_vectors",
    "steinberg_constituents",
    "transitivity_rewrite",
    "verify_local_cohomology",
    "verma_char",
    "weight_table",
    "weyl_dim",
]
