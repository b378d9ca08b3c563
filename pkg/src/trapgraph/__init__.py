"""Trapezoid-graph toolkit.

Diagrams, the O(n log n) vertex-connectivity sweep and its quadratic
reference, bipartite/triangle/caterpillar structure checks, and
brute-force oracles for validating all of the above.
"""

from .connectivity import (
    ConnectivityResult,
    CutLine,
    SweepState,
    compute_leftmost,
    compute_rightmost,
    crossing_set,
    kappa_fast,
    kappa_quadratic,
    min_nxy_for_x,
    n_xy,
)
from .diagram import (
    DiagramError,
    IntersectionGraph,
    PointIndex,
    TrapezoidDiagram,
    build_point_index,
    entirely_left,
    intersection_graph,
    is_adjacent,
    normalize,
    random_diagram,
    validate,
)
from .prefix_tree import MinPrefixTree
from .structure import (
    Bipartition,
    CaterpillarDecomposition,
    CaterpillarRefusal,
    OddCycle,
    caterpillar_to_diagram,
    has_triangle,
    is_bipartite,
    is_caterpillar,
    random_caterpillar,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CaterpillarDecomposition",
    "CaterpillarRefusal",
    "ConnectivityResult",
    "CutLine",
    "DiagramError",
    "IntersectionGraph",
    "MinPrefixTree",
    "OddCycle",
    "PointIndex",
    "SweepState",
    "TrapezoidDiagram",
    "build_point_index",
    "caterpillar_to_diagram",
    "compute_leftmost",
    "compute_rightmost",
    "crossing_set",
    "entirely_left",
    "has_triangle",
    "intersection_graph",
    "is_adjacent",
    "is_bipartite",
    "is_caterpillar",
    "kappa_fast",
    "kappa_quadratic",
    "min_nxy_for_x",
    "n_xy",
    "normalize",
    "random_caterpillar",
    "random_diagram",
    "validate",
]
