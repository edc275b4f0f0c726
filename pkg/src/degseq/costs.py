"""Per-vertex integer cost functions as explicit value tables.

A vertex function is a table of integers over {0, ..., d_i(H)}; the
classification flags (convex / nondecreasing / nonincreasing) decide
which polynomial solver applies.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidFunctionError
from .graph import Edge, Graph, subgraph_degrees


class FunctionClass(enum.Flag):
    GENERAL = 0
    CONVEX = enum.auto()
    NONDECREASING = enum.auto()
    NONINCREASING = enum.auto()


@dataclass(frozen=True)
class VertexCostFunction:
    """f: {0, ..., len(values)-1} -> Z, stored as an explicit table."""

    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) == 0:
            raise InvalidFunctionError("empty value table")
        for v in self.values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidFunctionError(f"non-integer table entry {v!r}")

    def __call__(self, x: int) -> int:
        if not (0 <= x < len(self.values)):
            raise InvalidFunctionError(
                f"argument {x} outside domain 0..{len(self.values) - 1}"
            )
        return self.values[x]

    @property
    def domain_size(self) -> int:
        return len(self.values)


def classify(f: VertexCostFunction) -> FunctionClass:
    """All structural flags the table satisfies.

    Domains of size <= 2 are vacuously convex; size <= 1 is vacuously
    monotone both ways.
    """
    v = f.values
    flags = FunctionClass.GENERAL
    if all(v[k + 1] - v[k] >= v[k] - v[k - 1] for k in range(1, len(v) - 1)):
        flags |= FunctionClass.CONVEX
    if all(v[k + 1] >= v[k] for k in range(len(v) - 1)):
        flags |= FunctionClass.NONDECREASING
    if all(v[k + 1] <= v[k] for k in range(len(v) - 1)):
        flags |= FunctionClass.NONINCREASING
    return flags


def is_convex(f: VertexCostFunction) -> bool:
    return bool(classify(f) & FunctionClass.CONVEX)


@dataclass(frozen=True)
class Instance:
    """A host graph H together with one cost table per vertex."""

    h: Graph
    functions: tuple[VertexCostFunction, ...]

    def __post_init__(self):
        if len(self.functions) != self.h.n:
            raise InvalidFunctionError(
                f"expected {self.h.n} functions, got {len(self.functions)}"
            )
        for i in range(1, self.h.n + 1):
            want = self.h.degree(i) + 1
            got = self.functions[i - 1].domain_size
            if got != want:
                raise InvalidFunctionError(
                    f"function at vertex {i} has {got} entries, expected {want}"
                )

    def f(self, i: int) -> VertexCostFunction:
        """The function attached to vertex i (1-indexed)."""
        return self.functions[i - 1]


def objective(inst: Instance, sub_edges: Iterable[Edge]) -> int:
    """Sum of f_i(d_i(G)) for the subgraph G = ([n], sub_edges)."""
    sub = set(sub_edges)
    if not sub <= inst.h.edges:
        bad = sorted(sub - inst.h.edges)
        raise InvalidFunctionError(f"edges {bad} are not edges of H")
    degs = subgraph_degrees(inst.h, sub)
    return sum(inst.f(i)(degs[i - 1]) for i in range(1, inst.h.n + 1))


def from_closed_form(spec: str, domain_size: int) -> VertexCostFunction:
    """Tabulate a closed-form expression in x, e.g. "(x-2)^2" or "x*(3-x)".

    The expression is evaluated at 0, ..., domain_size-1 and must produce
    integers.
    """
    if domain_size < 1:
        raise InvalidFunctionError("domain_size must be at least 1")
    expr = spec.replace("^", "**")
    values = []
    for x in range(domain_size):
        try:
            v = eval(expr, {"__builtins__": {}}, {"x": x})  # noqa: S307
        except Exception as exc:
            raise InvalidFunctionError(f"cannot evaluate {spec!r} at x={x}: {exc}")
        if isinstance(v, float) and v.is_integer():
            v = int(v)
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidFunctionError(f"{spec!r} gives non-integer {v!r} at x={x}")
        values.append(v)
    return VertexCostFunction(tuple(values))


def tables_for_graph(g: Graph, spec: str) -> tuple[VertexCostFunction, ...]:
    """One closed-form table per vertex, sized to that vertex's degree."""
    return tuple(from_closed_form(spec, g.degree(i) + 1) for i in range(1, g.n + 1))
