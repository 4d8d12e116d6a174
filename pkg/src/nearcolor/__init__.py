"""Near-proper graph colorings: exact bad-edge minimization and verification tools.

When fewer colors are available than a graph's chromatic number, every
coloring leaves some monochromatic ("bad") edges.  This package computes the
exact minimum for a fixed color budget, counts and reconstructs the optimal
colorings, and cross-checks every supported closed-form family value against
an exhaustive oracle.
"""

from .coloring import (
    BadEdges,
    ColorUsage,
    Coloring,
    RuleMode,
    adjacent_class_count,
    bad_edges,
    color_usage,
    cross_bad_edges,
    is_valid,
)
from .errors import (
    GraphFormatError,
    InfeasibleError,
    InvalidColoringError,
    InvalidParameterError,
    NearcolorError,
    SizeLimitError,
)
from .families import (
    BoundReport,
    FamilyResult,
    complete_defect_polynomial,
    complete_formula,
    corona_chromatic,
    corona_formula,
    cycle_defect_polynomial,
    falling_factorial,
    helm_formula,
    join_bound,
    odd_cycle_formula,
    path_formula,
    union_bound,
    wheel_formula,
)
from .graph import (
    Graph,
    VertexLabelMap,
    chromatic_number,
    complete,
    corona,
    cycle,
    disjoint_union,
    helm,
    join,
    path,
    wheel,
)
from .io import (
    coloring_from_json,
    coloring_to_json,
    coloring_to_line,
    load_graph,
    parse_coloring_line,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    write_dot,
    write_edge_list,
)
from .solver import (
    KChromaticSubgraph,
    MinUsage,
    SolveResult,
    SolverConfig,
    bad_edge_vertex_cover,
    count_optimal,
    enumerate_oracle,
    greedy_heuristic,
    k_chromatic_subgraph,
    minimum_color_usage,
    optimal_colorings,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BadEdges",
    "BoundReport",
    "ColorUsage",
    "Coloring",
    "FamilyResult",
    "Graph",
    "GraphFormatError",
    "InfeasibleError",
    "InvalidColoringError",
    "InvalidParameterError",
    "KChromaticSubgraph",
    "MinUsage",
    "NearcolorError",
    "RuleMode",
    "SizeLimitError",
    "SolveResult",
    "SolverConfig",
    "VertexLabelMap",
    "adjacent_class_count",
    "bad_edge_vertex_cover",
    "bad_edges",
    "chromatic_number",
    "color_usage",
    "coloring_from_json",
    "coloring_to_json",
    "coloring_to_line",
    "complete",
    "complete_defect_polynomial",
    "complete_formula",
    "corona",
    "corona_chromatic",
    "corona_formula",
    "count_optimal",
    "cross_bad_edges",
    "cycle",
    "cycle_defect_polynomial",
    "disjoint_union",
    "enumerate_oracle",
    "falling_factorial",
    "greedy_heuristic",
    "helm",
    "helm_formula",
    "is_valid",
    "join",
    "join_bound",
    "k_chromatic_subgraph",
    "load_graph",
    "minimum_color_usage",
    "odd_cycle_formula",
    "optimal_colorings",
    "parse_coloring_line",
    "parse_dimacs",
    "parse_edge_list",
    "parse_graph",
    "path",
    "path_formula",
    "solve",
    "union_bound",
    "wheel",
    "wheel_formula",
    "write_dot",
    "write_edge_list",
]
