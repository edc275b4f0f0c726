"""Simple undirected graphs on the vertex set {1, ..., n}.

Vertices are 1-indexed everywhere; edges are canonicalized as (min, max)
pairs. Graphs are immutable after construction, so they can be shared
freely between solvers and threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidGraphError, NotBipartiteError

Edge = tuple[int, int]


def canonical_edge(i: int, j: int) -> Edge:
    """Return the edge {i, j} as a sorted pair."""
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset[Edge]
    _adj: dict[int, frozenset[int]] = field(
        init=False, repr=False, compare=False, hash=False, default=None
    )

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"vertex count must be nonnegative, got {self.n}")
        adj: dict[int, set[int]] = {i: set() for i in range(1, self.n + 1)}
        for i, j in self.edges:
            if i == j:
                raise InvalidGraphError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise InvalidGraphError(f"edge ({i},{j}) out of range for n={self.n}")
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(
            self, "_adj", {i: frozenset(s) for i, s in adj.items()}
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, canonicalizing endpoint order and rejecting duplicates."""
        seen: set[Edge] = set()
        for i, j in edges:
            e = canonical_edge(i, j)
            if e in seen:
                raise InvalidGraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, i: int) -> int:
        self._check_vertex(i)
        return len(self._adj[i])

    def neighbors(self, i: int) -> frozenset[int]:
        """Vertices adjacent to i."""
        self._check_vertex(i)
        return self._adj[i]

    def has_edge(self, i: int, j: int) -> bool:
        return canonical_edge(i, j) in self.edges

    def _check_vertex(self, i: int):
        if not (1 <= i <= self.n):
            raise InvalidGraphError(f"vertex {i} out of range for n={self.n}")


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """The vector of vertex degrees (d_1, ..., d_n)."""
    return tuple(g.degree(i) for i in range(1, g.n + 1))


def subgraph_degrees(g: Graph, sub_edges: Iterable[Edge]) -> tuple[int, ...]:
    """Degree sequence of the subgraph ([n], sub_edges)."""
    deg = [0] * (g.n + 1)
    for i, j in sub_edges:
        deg[i] += 1
        deg[j] += 1
    return tuple(deg[1:])


@dataclass(frozen=True)
class BipartitePartition:
    """An ordered bipartition (I, J) of the vertex set."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    @classmethod
    def of(cls, left: Iterable[int], right: Iterable[int]) -> "BipartitePartition":
        return cls(tuple(left), tuple(right))

    def validate_cover(self, n: int):
        both = list(self.left) + list(self.right)
        if len(both) != len(set(both)) or set(both) != set(range(1, n + 1)):
            raise NotBipartiteError(
                f"partition {self.left} / {self.right} does not partition 1..{n}"
            )

    def swapped(self) -> "BipartitePartition":
        return BipartitePartition(self.right, self.left)


def check_bipartite(g: Graph, part: BipartitePartition) -> bool:
    """True iff every edge of g crosses the partition."""
    part.validate_cover(g.n)
    left = set(part.left)
    return all((i in left) != (j in left) for i, j in g.edges)


def find_bipartition(g: Graph) -> BipartitePartition | None:
    """2-color g if possible, returning a bipartition or None."""
    color: dict[int, int] = {}
    for start in range(1, g.n + 1):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    left = tuple(v for v in range(1, g.n + 1) if color[v] == 0)
    right = tuple(v for v in range(1, g.n + 1) if color[v] == 1)
    return BipartitePartition(left, right)


def induced_degree(g: Graph, j: int, subset: Iterable[int]) -> int:
    """Degree of j in the subgraph induced by `subset` (which must contain j)."""
    sub = set(subset)
    if j not in sub:
        raise InvalidGraphError(f"vertex {j} not in the induced subset")
    return sum(1 for k in g.neighbors(j) if k in sub)
