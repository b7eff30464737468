"""Exact combinatorics of summed intersection sizes over set families.

The package computes, bounds, and searches the total pairwise intersection
size of intersecting families (and cross-intersecting family pairs) of
k-subsets of {1..n}: closed-form extremal values, the cyclic-permutation
interval machinery that proves them, exhaustive branch-and-bound at desk
scale, and a seeded annealing sentinel beyond it.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundValue,
    binom,
    ekr_bound,
    omega_cross_bound,
    omega_intersecting_bound,
    omega_strict_bound,
    pm_star_count,
    star_identity_check,
)
from .cyclic import (
    CyclicPerm,
    DoubleCountReport,
    Interval,
    KatonaReport,
    RepresentablePair,
    double_count_check,
    enumerate_cyclic,
    interval_meet_family,
    interval_of,
    intervals_of_length,
    katona_verify,
    representable_pairs,
)
from .errors import (
    BadElementError,
    BadLengthError,
    BadSizeError,
    CounterexampleError,
    DuplicateSetError,
    GroundMismatchError,
    HypothesisError,
    IntersumError,
    NotExhaustiveError,
    TooLargeError,
)
from .search import (
    HeuristicConfig,
    SearchResult,
    UniquenessReport,
    WitnessAssessment,
    heuristic_max,
    max_omega_cross,
    max_omega_intersecting,
    max_omega_intersecting_naive,
    uniqueness_report,
)
from .setcore import (
    Family,
    KSet,
    Permutation,
    apply_perm,
    canonical_form,
    element_degrees,
    family_from_dict,
    family_to_dict,
    fingerprint,
    full_family,
    is_cross_intersecting,
    is_intersecting,
    is_star,
    kset,
    ksubset_masks,
    make_family,
    star,
)
from .weights import (
    Profile,
    intersection_profile,
    meet_weight,
    omega_cross,
    omega_cross_strict,
    omega_family,
    omega_generic,
    unit_weight,
)

__all__ = [
    "__version__",
    "BadElementError",
    "BadLengthError",
    "BadSizeError",
    "BoundValue",
    "CounterexampleError",
    "CyclicPerm",
    "DoubleCountReport",
    "DuplicateSetError",
    "Family",
    "GroundMismatchError",
    "HeuristicConfig",
    "HypothesisError",
    "Interval",
    "IntersumError",
    "KSet",
    "KatonaReport",
    "NotExhaustiveError",
    "Permutation",
    "Profile",
    "RepresentablePair",
    "SearchResult",
    "TooLargeError",
    "UniquenessReport",
    "WitnessAssessment",
    "apply_perm",
    "binom",
    "canonical_form",
    "double_count_check",
    "ekr_bound",
    "element_degrees",
    "enumerate_cyclic",
    "family_from_dict",
    "family_to_dict",
    "fingerprint",
    "full_family",
    "heuristic_max",
    "intersection_profile",
    "interval_meet_family",
    "interval_of",
    "intervals_of_length",
    "is_cross_intersecting",
    "is_intersecting",
    "is_star",
    "katona_verify",
    "kset",
    "ksubset_masks",
    "make_family",
    "max_omega_cross",
    "max_omega_intersecting",
    "max_omega_intersecting_naive",
    "meet_weight",
    "omega_cross",
    "omega_cross_bound",
    "omega_cross_strict",
    "omega_family",
    "omega_generic",
    "omega_intersecting_bound",
    "omega_strict_bound",
    "pm_star_count",
    "representable_pairs",
    "star",
    "star_identity_check",
    "uniqueness_report",
    "unit_weight",
]
