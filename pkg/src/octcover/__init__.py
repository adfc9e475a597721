"""Cover decomposition of octant translates.

Library for polychromatic colorings of point sets under wedge/octant
ranges: rank-space geometry, the recursive k-good coloring with its
threshold recurrence, exhaustive verifiers, cover dualization (octants
and triangle homothets), the wedge graph with its 4-coloring, and exact
minimal-threshold search.
"""
from .coloring import (
    Base2Contract,
    BudgetExhausted,
    ColoringError,
    ExhaustiveTwoColorer,
    Palette,
    base_two_color_search,
    closed_form_bound,
    color_set,
    threshold,
)
from .core import (
    OctantApex,
    OrderedPoint2,
    OrderedPointSet,
    Point3,
    RawPoint3,
    WedgeApex,
    canonical_apexes,
    min_wedge,
    project,
    rank_reduce,
    wedge_contents,
)
from .duality import (
    CoverInstance,
    Decomposition,
    DecompositionError,
    TriangleHomothet,
    coverage_count,
    decompose_cover,
    decompose_triangle_cover,
    min_full_coverage,
    triangle_contains,
    triangle_to_octant,
)
from .partition import Partition, build_partition, owned_set
from .search import (
    ThresholdResult,
    find_min_threshold,
    min_feasible_threshold,
    search_coloring,
    sweep,
)
from .verify import Coloring, Violation, empirical_min_threshold, verify, verify3d
from .wedgegraph import WedgeGraph, build_wedge_graph, four_color, verify_weak

__all__ = [
    "Base2Contract",
    "BudgetExhausted",
    "Coloring",
    "ColoringError",
    "CoverInstance",
    "Decomposition",
    "DecompositionError",
    "ExhaustiveTwoColorer",
    "OctantApex",
    "OrderedPoint2",
    "OrderedPointSet",
    "Palette",
    "Partition",
    "Point3",
    "RawPoint3",
    "ThresholdResult",
    "TriangleHomothet",
    "Violation",
    "WedgeApex",
    "WedgeGraph",
    "base_two_color_search",
    "build_partition",
    "build_wedge_graph",
    "canonical_apexes",
    "closed_form_bound",
    "color_set",
    "coverage_count",
    "decompose_cover",
    "decompose_triangle_cover",
    "empirical_min_threshold",
    "find_min_threshold",
    "four_color",
    "min_feasible_threshold",
    "min_full_coverage",
    "min_wedge",
    "owned_set",
    "project",
    "rank_reduce",
    "search_coloring",
    "sweep",
    "threshold",
    "triangle_contains",
    "triangle_to_octant",
    "verify",
    "verify3d",
    "verify_weak",
    "wedge_contents",
]
