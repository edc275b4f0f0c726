"""Exact minimum-cost perfect matching on general graphs.

The production path runs the Edmonds blossom algorithm (networkx's
max_weight_matching, an O(|V|^3) primal-dual implementation) on negated
costs with the max-cardinality flag, which handles negative integer
costs exactly. A recursive enumerator serves as the independent
brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import TooLargeError
from .graph import Edge, Graph

DEFAULT_MATCHING_ORACLE_LIMIT = 14


@dataclass(frozen=True)
class CostedGraph:
    """A graph with an integer cost on every edge (negative allowed)."""

    graph: Graph
    cost: dict[Edge, int]

    def __post_init__(self):
        if set(self.cost) != set(self.graph.edges):
            raise ValueError("cost map must cover exactly the edge set")


@dataclass(frozen=True)
class PerfectMatching:
    matched_edges: frozenset[Edge]
    total_cost: int


def min_cost_perfect_matching(cg: CostedGraph) -> PerfectMatching | None:
    """A minimum-cost perfect matching of cg, or None if none exists."""
    g = cg.graph
    if g.n % 2 == 1:
        return None
    if g.n == 0:
        return PerfectMatching(frozenset(), 0)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(1, g.n + 1))
    for e in g.sorted_edges():
        nxg.add_edge(e[0], e[1], weight=-cg.cost[e])
    mate = nx.max_weight_matching(nxg, maxcardinality=True)
    if 2 * len(mate) != g.n:
        return None
    edges = frozenset((i, j) if i < j else (j, i) for i, j in mate)
    return PerfectMatching(edges, sum(cg.cost[e] for e in edges))


def verify_matching(cg: CostedGraph, m: PerfectMatching) -> bool:
    """Certificate check: edges exist, every vertex covered once, cost adds up."""
    if not m.matched_edges <= cg.graph.edges:
        return False
    covered = [v for e in m.matched_edges for v in e]
    if sorted(covered) != list(range(1, cg.graph.n + 1)):
        return False
    return m.total_cost == sum(cg.cost[e] for e in m.matched_edges)


def brute_force_matching(
    cg: CostedGraph, limit: int = DEFAULT_MATCHING_ORACLE_LIMIT
) -> PerfectMatching | None:
    """Exhaustive minimum over all perfect matchings (testing oracle)."""
    g = cg.graph
    if g.n > limit:
        raise TooLargeError(g.n, limit)
    if g.n % 2 == 1:
        return None

    best: list = [None, None]  # cost, edge tuple

    def extend(uncovered: frozenset[int], chosen: list[Edge], cost: int):
        if not uncovered:
            if best[0] is None or cost < best[0]:
                best[0] = cost
                best[1] = tuple(chosen)
            return
        v = min(uncovered)
        for w in sorted(g.neighbors(v)):
            if w in uncovered:
                e = (v, w) if v < w else (w, v)
                chosen.append(e)
                extend(uncovered - {v, w}, chosen, cost + cg.cost[e])
                chosen.pop()

    extend(frozenset(range(1, g.n + 1)), [], 0)
    if best[0] is None:
        return None
    return PerfectMatching(frozenset(best[1]), best[0])
