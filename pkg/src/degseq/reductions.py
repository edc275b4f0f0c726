"""Encodings of the classical special cases as degree-sequence instances.

general factor, (l,u)-factor, exact matching on K_{n,n}, and the two
hardness families. Encoders are faithful constructions; the exact
matching gadget mixes convex and concave tables and is only solvable
here at oracle scale.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .costs import FunctionClass, Instance, VertexCostFunction, classify
from .errors import DegseqError, NotBipartiteError
from .graph import BipartitePartition, Edge, Graph, check_bipartite, subgraph_degrees
from .solution import Solution


@dataclass(frozen=True)
class FactorSpec:
    """Allowed-degree sets B_i for the general factor problem."""

    h: Graph
    allowed: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.allowed) != self.h.n:
            raise DegseqError("need one allowed set per vertex")
        for i in range(1, self.h.n + 1):
            b = self.allowed[i - 1]
            # Entries above d_i(H) are unattainable but harmless; negatives are not.
            if not b or not all(x >= 0 for x in b):
                raise DegseqError(f"allowed set at vertex {i} invalid: {sorted(b)}")


@dataclass(frozen=True)
class LUFactorSpec:
    h: Graph
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self):
        for i in range(1, self.h.n + 1):
            l, u = self.lower[i - 1], self.upper[i - 1]
            if not (0 <= l <= u <= self.h.degree(i)):
                raise DegseqError(f"interval [{l},{u}] invalid at vertex {i}")


@dataclass(frozen=True)
class ExactMatchingSpec:
    """Targets b and edge coloring c of K_{n,n} for exact matching."""

    n: int
    r: int
    target: tuple[int, ...]
    coloring: dict  # (i, j) -> color in 1..r

    def __post_init__(self):
        if len(self.target) != self.r:
            raise DegseqError("need one target per color")
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                c = self.coloring.get((i, j))
                if c is None or not (1 <= c <= self.r):
                    raise DegseqError(f"coloring missing/invalid at ({i},{j})")
        if sum(self.target) != self.n:
            warnings.warn(
                f"color targets sum to {sum(self.target)} != n = {self.n}; "
                "the encoded optimum is provably positive",
                stacklevel=2,
            )


def encode_factor(spec: FactorSpec) -> Instance:
    """0/1 indicator tables: optimum 0 iff a factor exists."""
    funcs = []
    for i in range(1, spec.h.n + 1):
        b = spec.allowed[i - 1]
        funcs.append(
            VertexCostFunction(
                tuple(0 if x in b else 1 for x in range(spec.h.degree(i) + 1))
            )
        )
    return Instance(spec.h, tuple(funcs))


def encode_lu_factor(spec: LUFactorSpec) -> Instance:
    """Convex distance-to-interval tables: optimum 0 iff an (l,u)-factor exists."""
    funcs = []
    for i in range(1, spec.h.n + 1):
        l, u = spec.lower[i - 1], spec.upper[i - 1]
        table = tuple(
            max(l - x, 0, x - u) for x in range(spec.h.degree(i) + 1)
        )
        f = VertexCostFunction(table)
        assert classify(f) & FunctionClass.CONVEX
        funcs.append(f)
    return Instance(spec.h, tuple(funcs))


def decode_factor(spec, sol: Solution) -> frozenset[Edge] | None:
    """The factor witnessed by an optimum-0 solution, else None."""
    if sol.value != 0:
        return None
    if isinstance(spec, LUFactorSpec):
        ok = all(
            spec.lower[i] <= sol.degrees[i] <= spec.upper[i]
            for i in range(spec.h.n)
        )
    else:
        ok = all(sol.degrees[i] in spec.allowed[i] for i in range(spec.h.n))
    if not ok:
        raise DegseqError("optimum-0 solution does not satisfy the degree sets")
    return sol.edges


@dataclass(frozen=True)
class ExactMatchingEncoding:
    """The gadget instance plus the vertex numbering needed to decode."""

    spec: ExactMatchingSpec
    instance: Instance

    # Numbering: u_1..u_n, v_1..v_n, w_{i,j} row-major, x_1..x_r.
    def u(self, i: int) -> int:
        return i

    def v(self, j: int) -> int:
        return self.spec.n + j

    def w(self, i: int, j: int) -> int:
        return 2 * self.spec.n + (i - 1) * self.spec.n + j

    def x(self, k: int) -> int:
        return 2 * self.spec.n + self.spec.n**2 + k

    def decode(self, sol: Solution) -> set[tuple[int, int]] | None:
        """The exact matching {(i,j) : d_w(G) = 3} from an optimum-0 solution."""
        if sol.value != 0:
            return None
        return {
            (i, j)
            for i in range(1, self.spec.n + 1)
            for j in range(1, self.spec.n + 1)
            if sol.degrees[self.w(i, j) - 1] == 3
        }


def encode_exact_matching(spec: ExactMatchingSpec) -> ExactMatchingEncoding:
    """The 2n + n^2 + r vertex gadget whose optimum is 0 iff an exact
    matching with color counts b exists."""
    n, r = spec.n, spec.r
    enc_vertices = 2 * n + n * n + r

    edges = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            w = 2 * n + (i - 1) * n + j
            edges.append((i, w))
            edges.append((n + j, w))
            edges.append((w, 2 * n + n * n + spec.coloring[(i, j)]))
    g = Graph.from_edges(enc_vertices, edges)

    square = lambda center, d: tuple((x - center) ** 2 for x in range(d + 1))
    funcs: list[VertexCostFunction] = []
    for i in range(1, n + 1):  # u_i, degree n
        funcs.append(VertexCostFunction(square(1, g.degree(i))))
    for j in range(1, n + 1):  # v_j, degree n
        funcs.append(VertexCostFunction(square(1, g.degree(n + j))))
    for _ in range(n * n):  # w_{i,j}, degree 3, concave x(3-x)
        funcs.append(VertexCostFunction((0, 2, 2, 0)))
    for k in range(1, r + 1):  # x_k, degree = #edges with color k
        d = g.degree(2 * n + n * n + k)
        if spec.target[k - 1] > d:
            warnings.warn(
                f"target b_{k} = {spec.target[k - 1]} exceeds the {d} edges "
                "of that color; optimum 0 is impossible",
                stacklevel=2,
            )
        funcs.append(VertexCostFunction(square(spec.target[k - 1], d)))

    return ExactMatchingEncoding(spec, Instance(g, tuple(funcs)))


def gen_hardness_instance(
    kind: str, base: Graph, part: BipartitePartition | None = None
) -> Instance:
    """The two NP-hardness instance families over a base graph."""
    if kind == "cubic":
        funcs = tuple(
            VertexCostFunction(
                tuple(0 if x in (0, 3) else 1 for x in range(base.degree(i) + 1))
            )
            for i in range(1, base.n + 1)
        )
        return Instance(base, funcs)
    if kind == "bipartite-convex-concave":
        if part is None or not check_bipartite(base, part):
            raise NotBipartiteError(
                "the convex/concave family needs a valid bipartition"
            )
        left = set(part.left)
        funcs = []
        for i in range(1, base.n + 1):
            d = base.degree(i)
            if i in left:
                funcs.append(VertexCostFunction(tuple((x - 1) ** 2 for x in range(d + 1))))
            else:
                funcs.append(VertexCostFunction(tuple(x * (3 - x) for x in range(d + 1))))
        return Instance(base, tuple(funcs))
    raise DegseqError(f"unknown hardness kind {kind!r}")
