"""Exact polymatroid Tutte polynomials, their classical and lattice-series companions, and
exhaustive checks of the permutation-invariance machinery on small instances."""

from .activity import (
    ActivityRecord,
    Fiber,
    TightFamily,
    active_via_tight_sets,
    activity_record,
    activity_records,
    fiber_decomposition,
    is_externally_active,
    is_internally_active,
    tight_sets,
)
from .core import (
    Permutation,
    Polymatroid,
    RankFunction,
    apply_permutation,
    contains,
    coordinate_bounds,
    elements_of,
    enumerate_bases,
    is_matroid_rank,
    make_coverage_polymatroid,
    make_graphic_matroid,
    make_random_coverage_polymatroid,
    make_uniform_matroid,
    mask_of,
    validate_rank_function,
)
from .errors import *  # noqa: F401,F403
from .invariants import (
    DistanceProfile,
    FiberIdentityReport,
    classical_tutte_activity,
    classical_tutte_corank_nullity,
    correspondence_check,
    d_gt,
    d_lt,
    fiber_identity_check,
    polymatroid_tutte,
    polytope_distance,
    series_equivalence_check,
    sn_invariance_check,
    truncated_tilde_series,
)
from .lemmas import lemma_property_suite
from .poly import BivariatePolynomial, TruncatedSeries, expand_transformed_tutte, series_geom

__version__ = "0.1.0"
