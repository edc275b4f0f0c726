"""Exact solvers for degree-sequence optimization over subgraphs.

Given a host graph H on vertices 1..n and an integer cost table per
vertex, find a subgraph G of H minimizing the sum of the tables
evaluated at the subgraph degrees. Three polynomial solvers (convex
costs via minimum-cost perfect matching, unbalanced bipartite via a
layered DP, and mostly-monotone costs via an extended DP) are checked
against an exhaustive oracle; classical factor and exact-matching
problems are provided as encodings.
"""

from .costs import (
    FunctionClass,
    Instance,
    VertexCostFunction,
    classify,
    from_closed_form,
    objective,
    tables_for_graph,
)
from .convex import build_aux_graph, relate_values, solve_convex
from .dp import build_dp, solve_bipartite
from .graph import (
    BipartitePartition,
    Graph,
    check_bipartite,
    degree_sequence,
    find_bipartition,
    induced_degree,
)
from .matching import (
    CostedGraph,
    PerfectMatching,
    brute_force_matching,
    min_cost_perfect_matching,
    verify_matching,
)
from .monotone import reduce_monotone, solve_monotone
from .oracle import OracleReport, brute_force, count_optima, solve_brute
from .reductions import (
    ExactMatchingSpec,
    FactorSpec,
    LUFactorSpec,
    decode_factor,
    encode_exact_matching,
    encode_factor,
    encode_lu_factor,
    gen_hardness_instance,
)
from .router import applicable_methods, solve_auto
from .solution import Solution

__version__ = "0.1.0"

__all__ = [
    "BipartitePartition",
    "CostedGraph",
    "ExactMatchingSpec",
    "FactorSpec",
    "FunctionClass",
    "Graph",
    "Instance",
    "LUFactorSpec",
    "OracleReport",
    "PerfectMatching",
    "Solution",
    "VertexCostFunction",
    "applicable_methods",
    "brute_force",
    "brute_force_matching",
    "build_aux_graph",
    "build_dp",
    "check_bipartite",
    "classify",
    "count_optima",
    "decode_factor",
    "degree_sequence",
    "encode_exact_matching",
    "encode_factor",
    "encode_lu_factor",
    "find_bipartition",
    "from_closed_form",
    "gen_hardness_instance",
    "induced_degree",
    "min_cost_perfect_matching",
    "objective",
    "reduce_monotone",
    "relate_values",
    "solve_auto",
    "solve_bipartite",
    "solve_brute",
    "solve_convex",
    "solve_monotone",
    "tables_for_graph",
    "verify_matching",
]
