"""Convex-cost solver via reduction to minimum-cost perfect matching.

For each vertex i of H the auxiliary graph gets edge copies u_i^e, v_i^e
and slot pairs x_i^k, y_i^k whose pair edge costs the k-th difference
f_i(k) - f_i(k-1). With convex tables these differences are sorted, and
a minimum-cost perfect matching of the auxiliary graph encodes an
optimal subgraph of H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .costs import Instance, is_convex
from .errors import InternalError, NonConvexFunctionError
from .graph import Edge, Graph
from .matching import CostedGraph, PerfectMatching, min_cost_perfect_matching
from .solution import Solution, make_solution

# Auxiliary-graph vertex labels: ("u"|"v", i, host_edge) or ("x"|"y", i, k).
Label = tuple


@dataclass(frozen=True)
class AuxGraph:
    """The matching gadget built from a convex instance."""

    costed: CostedGraph
    labels: tuple[Label, ...]  # index -> label, sorted lexicographically
    index: dict  # label -> 1-based index
    back_map: dict  # L-edge of the {u_i^e, u_j^e} family -> host edge e


def build_aux_graph(inst: Instance) -> AuxGraph:
    """Construct the gadget graph; requires every table to be convex."""
    h = inst.h
    for i in range(1, h.n + 1):
        if not is_convex(inst.f(i)):
            raise NonConvexFunctionError(i)

    labels: list[Label] = []
    for i in range(1, h.n + 1):
        d = h.degree(i)
        for e in sorted(h.edges):
            if i in e:
                labels.append(("u", i, e))
                labels.append(("v", i, e))
        for k in range(1, d + 1):
            labels.append(("x", i, k))
            labels.append(("y", i, k))
    labels.sort()
    index = {lab: idx + 1 for idx, lab in enumerate(labels)}

    def edge_of(a: Label, b: Label) -> Edge:
        ia, ib = index[a], index[b]
        return (ia, ib) if ia < ib else (ib, ia)

    cost: dict[Edge, int] = {}
    back_map: dict[Edge, Edge] = {}
    for i in range(1, h.n + 1):
        f = inst.f(i)
        d = h.degree(i)
        incident = [e for e in sorted(h.edges) if i in e]
        for k in range(1, d + 1):
            for e in incident:
                cost[edge_of(("u", i, e), ("x", i, k))] = 0
                cost[edge_of(("v", i, e), ("y", i, k))] = 0
            cost[edge_of(("x", i, k), ("y", i, k))] = f(k) - f(k - 1)
        diffs = [f(k) - f(k - 1) for k in range(1, d + 1)]
        if diffs != sorted(diffs):
            raise InternalError(f"gadget costs for vertex {i} are not sorted")
    for e in sorted(inst.h.edges):
        i, j = e
        uu = edge_of(("u", i, e), ("u", j, e))
        cost[uu] = 0
        cost[edge_of(("v", i, e), ("v", j, e))] = 0
        back_map[uu] = e

    lg = Graph(len(labels), frozenset(cost))
    return AuxGraph(CostedGraph(lg, cost), tuple(labels), index, back_map)


def recover_subgraph(aux: AuxGraph, matching: PerfectMatching) -> frozenset[Edge]:
    """Host edges whose u-side copy edge is matched."""
    return frozenset(
        aux.back_map[e] for e in matching.matched_edges if e in aux.back_map
    )


def relate_values(inst: Instance, matching_cost: int) -> int:
    """Translate the gadget's optimal matching cost into the instance optimum."""
    return matching_cost + sum(inst.f(i)(0) for i in range(1, inst.h.n + 1))


def solve_convex(inst: Instance) -> Solution:
    """Exact optimum for an all-convex instance."""
    aux = build_aux_graph(inst)
    matching = min_cost_perfect_matching(aux.costed)
    if matching is None:
        raise InternalError("auxiliary graph has no perfect matching")
    sub_edges = recover_subgraph(aux, matching)
    value = relate_values(inst, matching.total_cost)
    return make_solution(
        inst,
        sub_edges,
        value,
        "convex",
        aux_vertices=aux.costed.graph.n,
        aux_edges=aux.costed.graph.num_edges,
        matching_cost=matching.total_cost,
    )


def _label_name(lab: Label) -> str:
    kind, i, sub = lab
    if kind in ("u", "v"):
        return f"{kind}{i}_e{sub[0]}{sub[1]}"
    return f"{kind}{i}_{sub}"


def aux_graph_to_dot(aux: AuxGraph, matching: PerfectMatching | None = None) -> str:
    """DOT text for the gadget; nonzero costs labeled, matching in red."""
    matched = matching.matched_edges if matching is not None else frozenset()
    lines = ["graph aux {", "  node [shape=circle fontsize=10];"]
    for idx, lab in enumerate(aux.labels, start=1):
        lines.append(f'  n{idx} [label="{_label_name(lab)}"];')
    for e in aux.costed.graph.sorted_edges():
        attrs = []
        c = aux.costed.cost[e]
        if c != 0:
            attrs.append(f'label="{c}" fontcolor=blue')
        if e in matched:
            attrs.append("color=red penwidth=2")
        attr = f" [{' '.join(attrs)}]" if attrs else ""
        lines.append(f"  n{e[0]} -- n{e[1]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
