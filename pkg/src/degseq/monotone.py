"""Solver for instances whose functions outside a fixed set are uniformly
monotone.

Nondecreasing functions let every edge inside the free side J be dropped
from some optimum; nonincreasing functions let every such edge be forced
in, after shifting each f_j by its induced degree in H[J]. Either way
the residual problem is bipartite-with-intra-I-edges and is solved by
the layered DP extended with one zero-cost decision stage per intra-I
edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .costs import FunctionClass, Instance, VertexCostFunction, classify
from .dp import DEFAULT_STATE_BUDGET, DpDigraph, build_layered_dp, decode_path
from .errors import MixedMonotonicityError
from .graph import Edge, canonical_edge, induced_degree
from .solution import Solution, make_solution


class Direction(enum.Enum):
    NONDECREASING = "nondecreasing"
    NONINCREASING = "nonincreasing"


@dataclass(frozen=True)
class MonotoneReduction:
    direction: Direction
    fixed: tuple[int, ...]  # I, sorted
    free: tuple[int, ...]  # J, sorted
    forced_intra_j_edges: frozenset[Edge]
    shifted_functions: dict  # vertex -> table used by the DP (fbar)
    intra_i_edges: tuple[Edge, ...]  # lexicographic stage order


def reduce_monotone(inst: Instance, fixed_set) -> MonotoneReduction:
    """Classify the free-side direction and precompute shifts/forced edges."""
    h = inst.h
    fixed = tuple(sorted(set(fixed_set)))
    free = tuple(v for v in range(1, h.n + 1) if v not in set(fixed))

    nondec = all(classify(inst.f(j)) & FunctionClass.NONDECREASING for j in free)
    noninc = all(classify(inst.f(j)) & FunctionClass.NONINCREASING for j in free)
    if not nondec and not noninc:
        up = next(  # blocks the all-nonincreasing route
            j for j in free
            if not classify(inst.f(j)) & FunctionClass.NONINCREASING
        )
        down = next(  # blocks the all-nondecreasing route
            j for j in free
            if not classify(inst.f(j)) & FunctionClass.NONDECREASING
        )
        raise MixedMonotonicityError(up, down)

    intra_i = tuple(
        e for e in h.sorted_edges() if e[0] in set(fixed) and e[1] in set(fixed)
    )
    intra_j = frozenset(
        e for e in h.edges if e[0] in set(free) and e[1] in set(free)
    )

    # Constant free-side functions satisfy both directions; prefer the
    # nondecreasing reduction, which forces nothing and shifts nothing.
    if nondec:
        shifted = {j: inst.f(j) for j in free}
        return MonotoneReduction(
            Direction.NONDECREASING, fixed, free, frozenset(), shifted, intra_i
        )

    shifted = {}
    for j in free:
        dj_in = induced_degree(h, j, free)
        table = inst.f(j).values[dj_in:]
        shifted[j] = VertexCostFunction(tuple(table))
    return MonotoneReduction(
        Direction.NONINCREASING, fixed, free, intra_j, shifted, intra_i
    )


def build_extended_dp(
    red: MonotoneReduction,
    inst: Instance,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> DpDigraph:
    """The layered DP over cross edges plus intra-I decision stages."""
    h = inst.h
    i_verts = red.fixed
    pos = {iv: p for p, iv in enumerate(i_verts)}
    caps = tuple(h.degree(iv) for iv in i_verts)
    stages = tuple(("j", jv) for jv in red.free) + tuple(
        ("edge", (pos[a], pos[b])) for a, b in red.intra_i_edges
    )
    neighbors = {
        jv: tuple(sorted(pos[w] for w in h.neighbors(jv) if w in pos))
        for jv in red.free
    }
    return build_layered_dp(
        i_verts,
        caps,
        stages,
        neighbors,
        stage_cost=lambda jv, cnt: red.shifted_functions[jv](cnt),
        final_cost=lambda v: sum(inst.f(iv)(v[p]) for p, iv in enumerate(i_verts)),
        state_budget=state_budget,
    )


def solve_monotone(
    inst: Instance,
    fixed_set,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> Solution:
    """Exact optimum when all free-side functions share a monotone direction."""
    red = reduce_monotone(inst, fixed_set)
    dp = build_extended_dp(red, inst, state_budget)
    # Forced intra-J edges are already priced by the shifted tables.
    edges = decode_path(dp) | red.forced_intra_j_edges
    value = dp.sink_dist
    return make_solution(
        inst,
        edges,
        value,
        "monotone-dp",
        direction=red.direction.value,
        full_node_count=dp.full_node_count,
        num_intra_i_stages=len(red.intra_i_edges),
        num_forced_intra_j=len(red.forced_intra_j_edges),
    )
