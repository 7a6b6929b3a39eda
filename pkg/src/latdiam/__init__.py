"""Exact search for the largest edge-graph diameter of lattice polytopes.

A lattice polytope on the grid {0,...,k}^d is the convex hull of integer
points with coordinates between 0 and k.  This package determines, by exact
integer arithmetic throughout, the largest possible edge-graph diameter over
all such polytopes for d = 3 and small k, and emits machine-checkable
certificates for the results.
"""

__version__ = "0.1.0"

from .geometry import (
    DegenerateGeometryError,
    Polytope3,
    contains_point,
    edge_graph,
    graph_diameter,
    graph_distance,
    hull2d,
    hull3d,
    orient2d,
)
from .polygons import (
    PolygonFamily,
    corner_edge_filter,
    enumerate_family,
    max_polygon_diameter,
    polygon_diameter,
)
from .symmetry import AntipodalPair, CubeSymmetry, canonical_pairs, enumerate_group
from .boundary import BoundaryAssembly, FacetSlot, embed, enumerate_assemblies, shortcut_exists
from .interior import SearchOutcome, candidate_points, explore
from .minkowski import (
    GeneratorSet,
    MinkowskiFitError,
    conjectured_max_diameter,
    minkowski_polytope,
    preset_generators,
)
from .driver import Certificate, Decision, SearchConfig, compute_delta, decide_upper

__all__ = [
    "AntipodalPair",
    "BoundaryAssembly",
    "Certificate",
    "CubeSymmetry",
    "Decision",
    "DegenerateGeometryError",
    "FacetSlot",
    "GeneratorSet",
    "MinkowskiFitError",
    "PolygonFamily",
    "Polytope3",
    "SearchConfig",
    "SearchOutcome",
    "candidate_points",
    "canonical_pairs",
    "compute_delta",
    "conjectured_max_diameter",
    "contains_point",
    "corner_edge_filter",
    "decide_upper",
    "edge_graph",
    "embed",
    "enumerate_assemblies",
    "enumerate_family",
    "enumerate_group",
    "explore",
    "graph_diameter",
    "graph_distance",
    "hull2d",
    "hull3d",
    "max_polygon_diameter",
    "minkowski_polytope",
    "orient2d",
    "polygon_diameter",
    "preset_generators",
    "shortcut_exists",
]
