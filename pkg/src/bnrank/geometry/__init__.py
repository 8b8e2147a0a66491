"""Exact rational geometry of Laplacian lattices in the hyperplane H_0."""

from bnrank.geometry.automorphism import (
    BadAlphaShape,
    HeightNotDivisor,
    LinearMapH0,
    SingularMap,
    complete_graph,
    complete_graph_automorphism,
    verify_critical_automorphism,
)
from bnrank.geometry.crit import covering_radius, crit_classes, crit_points, h_distance, local_max_verify
from bnrank.geometry.duality import TilingReport, TOutOfRange, duality_tiling_check, mapped_duality_check
from bnrank.geometry.polytope import (
    Halfspace,
    PolytopeMN,
    polytope_contains,
    polytope_separate,
    polytope_vertices,
    vertex_hull_contains,
)
from bnrank.geometry.simplex import (
    DELTA,
    DELTA_BAR,
    NotInH0,
    SimplexSpec,
    dplus_by_intersection,
    dplus_distance,
    project_h0,
    simplex_distance,
)

__all__ = [
    "BadAlphaShape",
    "DELTA",
    "DELTA_BAR",
    "Halfspace",
    "HeightNotDivisor",
    "LinearMapH0",
    "NotInH0",
    "PolytopeMN",
    "SimplexSpec",
    "SingularMap",
    "TOutOfRange",
    "TilingReport",
    "complete_graph",
    "complete_graph_automorphism",
    "covering_radius",
    "crit_classes",
    "crit_points",
    "dplus_by_intersection",
    "dplus_distance",
    "duality_tiling_check",
    "h_distance",
    "local_max_verify",
    "mapped_duality_check",
    "polytope_contains",
    "polytope_separate",
    "polytope_vertices",
    "project_h0",
    "simplex_distance",
    "verify_critical_automorphism",
    "vertex_hull_contains",
]
