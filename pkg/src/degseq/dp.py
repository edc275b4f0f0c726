"""Layered shortest-path dynamic program for unbalanced bipartite graphs.

States [v, j] record the accumulated degrees v of the fixed side I after
the neighborhoods of the first j right-side vertices have been decided.
Arcs advance one layer, so a single relaxation pass in layer order
computes a shortest path; a shortest source-to-sink path decodes into an
optimal subgraph.

The same machinery carries the extension with intra-I edge decision
stages (see the monotone module): a stage is either a right-side vertex
("j" stage) or an intra-I edge ("edge" stage).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

from .costs import Instance, VertexCostFunction
from .errors import InternalError, NotBipartiteError, StateBudgetExceededError
from .graph import BipartitePartition, Edge, check_bipartite
from .solution import Solution, make_solution

DEFAULT_STATE_BUDGET = 10**7

State = tuple[int, ...]
Stage = tuple  # ("j", right_vertex) or ("edge", (a, b))


@dataclass
class _Node:
    dist: int
    pred: State | None
    decision: object


@dataclass
class DpDigraph:
    """The layered digraph, with reachable states only ("pruned")."""

    i_vertices: tuple[int, ...]
    stages: tuple[Stage, ...]
    caps: tuple[int, ...]  # per-position upper bound d_i(H) on v_i
    layers: list[dict]  # layer k: state after stage k -> _Node
    arcs: list  # (dst_layer, src_state, dst_state, length, decision)
    full_node_count: int
    sink_dist: int
    sink_pred: State

    def shortest_path_states(self) -> list[State]:
        """Source-to-sink chain of states realizing the optimum."""
        chain = [self.sink_pred]
        for k in range(len(self.stages), 0, -1):
            chain.append(self.layers[k][chain[-1]].pred)
        chain.reverse()
        return chain


def full_state_count(num_stages: int, caps) -> int:
    """Closed-form node count before reachability pruning."""
    return 2 + num_stages * math.prod(c + 1 for c in caps)


def build_layered_dp(
    i_vertices: tuple[int, ...],
    caps: tuple[int, ...],
    stages: tuple[Stage, ...],
    stage_neighbors: dict,  # right vertex -> ordered I-positions adjacent to it
    stage_cost: Callable[[int, int], int],  # (right vertex, chosen count) -> length
    final_cost: Callable[[State], int],
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> DpDigraph:
    """Build the digraph layer by layer from reachable states and relax it."""
    projected = full_state_count(len(stages), caps)
    if projected - 2 > state_budget:
        raise StateBudgetExceededError(projected, state_budget)

    source: State = tuple([0] * len(i_vertices))
    layers: list[dict] = [{source: _Node(0, None, None)}]
    arcs: list = []

    for k, stage in enumerate(stages, start=1):
        layer: dict[State, _Node] = {}

        def relax(u: State, v: State, length: int, decision):
            cand = layers[k - 1][u].dist + length
            node = layer.get(v)
            if node is None or cand < node.dist:
                layer[v] = _Node(cand, u, decision)
            arcs.append((k, u, v, length, decision))

        if stage[0] == "j":
            jv = stage[1]
            nbr = stage_neighbors[jv]
            for u in sorted(layers[k - 1]):
                free = [p for p in nbr if u[p] < caps[p]]
                for mask in range(1 << len(free)):
                    chosen = [free[b] for b in range(len(free)) if mask >> b & 1]
                    v = list(u)
                    for p in chosen:
                        v[p] += 1
                    relax(u, tuple(v), stage_cost(jv, len(chosen)), frozenset(chosen))
        else:
            a, b = stage[1]  # positions into i_vertices
            for u in sorted(layers[k - 1]):
                relax(u, u, 0, False)
                if u[a] < caps[a] and u[b] < caps[b]:
                    v = list(u)
                    v[a] += 1
                    v[b] += 1
                    relax(u, tuple(v), 0, True)
        layers.append(layer)

    sink_dist = None
    sink_pred = None
    for v in sorted(layers[-1]):
        cand = layers[-1][v].dist + final_cost(v)
        arcs.append((len(stages) + 1, v, None, final_cost(v), None))
        if sink_dist is None or cand < sink_dist:
            sink_dist = cand
            sink_pred = v
    if sink_dist is None:
        raise InternalError("dynamic program has no source-to-sink path")

    return DpDigraph(
        i_vertices, stages, caps, layers, arcs, projected, sink_dist, sink_pred
    )


def _oriented(inst: Instance, part: BipartitePartition) -> BipartitePartition:
    if not check_bipartite(inst.h, part):
        raise NotBipartiteError("an edge fails to cross the given partition")
    if len(part.left) > len(part.right):
        warnings.warn(
            "left side larger than right; swapping sides so the DP is "
            "exponential in the smaller one",
            stacklevel=3,
        )
        part = part.swapped()
    return part


def build_dp(
    inst: Instance,
    part: BipartitePartition,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> DpDigraph:
    """The shortest-path digraph for a bipartite instance."""
    part = _oriented(inst, part)
    h = inst.h
    i_verts = tuple(part.left)
    pos = {iv: p for p, iv in enumerate(i_verts)}
    caps = tuple(h.degree(iv) for iv in i_verts)
    stages = tuple(("j", jv) for jv in part.right)
    neighbors = {
        jv: tuple(sorted(pos[w] for w in h.neighbors(jv))) for jv in part.right
    }
    return build_layered_dp(
        i_verts,
        caps,
        stages,
        neighbors,
        stage_cost=lambda jv, cnt: inst.f(jv)(cnt),
        final_cost=lambda v: sum(inst.f(iv)(v[p]) for p, iv in enumerate(i_verts)),
        state_budget=state_budget,
    )


def decode_path(dp: DpDigraph) -> frozenset[Edge]:
    """Read the chosen edges off the shortest path."""
    chain = dp.shortest_path_states()
    edges: set[Edge] = set()
    for k, stage in enumerate(dp.stages, start=1):
        decision = dp.layers[k][chain[k]].decision
        if stage[0] == "j":
            jv = stage[1]
            for p in decision:
                iv = dp.i_vertices[p]
                edges.add((iv, jv) if iv < jv else (jv, iv))
        elif decision:
            a, b = stage[1]
            iv, jv = dp.i_vertices[a], dp.i_vertices[b]
            edges.add((iv, jv) if iv < jv else (jv, iv))
    return frozenset(edges)


def solve_bipartite(
    inst: Instance,
    part: BipartitePartition,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> Solution:
    """Exact optimum for a bipartite instance with arbitrary tables."""
    dp = build_dp(inst, part, state_budget)
    edges = decode_path(dp)
    return make_solution(
        inst,
        edges,
        dp.sink_dist,
        "bipartite-dp",
        full_node_count=dp.full_node_count,
        reachable_nodes=2 + sum(len(layer) for layer in dp.layers[1:]),
    )


def _state_name(v: State, k: int) -> str:
    return f"s{k}_" + "_".join(map(str, v))


def _stage_tag(stage: Stage) -> str:
    if stage[0] == "j":
        return f"j={stage[1]}"
    return "e={%d,%d}" % stage[1]


def dp_to_dot(dp: DpDigraph) -> str:
    """DOT text of the reachable digraph with the shortest path in red."""
    chain = dp.shortest_path_states()
    on_path = {(k, chain[k]) for k in range(len(chain))}
    lines = ["digraph dp {", "  rankdir=LR;", "  node [shape=box fontsize=10];"]
    lines.append('  source [label="[0,0]"];')
    lines.append('  sink [label="sink"];')
    for k in range(1, len(dp.stages) + 1):
        shape = "box" if dp.stages[k - 1][0] == "j" else "ellipse"
        tag = _stage_tag(dp.stages[k - 1])
        for v in sorted(dp.layers[k]):
            mark = " color=red" if (k, v) in on_path else ""
            lines.append(
                f'  {_state_name(v, k)} [shape={shape} label="[{",".join(map(str, v))}; {tag}]"{mark}];'
            )
    for k, u, v, length, _decision in dp.arcs:
        src = "source" if k == 1 else _state_name(u, k - 1)
        if k == 1 and len(dp.stages) == 0:
            src = "source"
        if v is None:
            dst = "sink"
            red = (k - 1, u) in on_path
        else:
            dst = _state_name(v, k)
            red = (k - 1, u) in on_path and (k, v) in on_path and (
                dp.layers[k][v].pred == u
            )
        attrs = [f'label="{length}"']
        if red:
            attrs.append("color=red penwidth=2")
        lines.append(f"  {src} -> {dst} [{' '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
