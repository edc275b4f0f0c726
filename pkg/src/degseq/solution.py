"""The common result record returned by every solver."""

from __future__ import annotations

from dataclasses import dataclass, field

from .costs import Instance, objective
from .errors import InternalError
from .graph import Edge, subgraph_degrees


@dataclass(frozen=True)
class Solution:
    """An optimal subgraph together with its objective value."""

    edges: frozenset[Edge]
    degrees: tuple[int, ...]
    value: int
    method: str
    diagnostics: dict = field(default_factory=dict, compare=False)


def make_solution(inst: Instance, edges, value: int, method: str, **diag) -> Solution:
    """Build a Solution, re-deriving degrees and cross-checking the value."""
    edges = frozenset(edges)
    recomputed = objective(inst, edges)
    if recomputed != value:
        raise InternalError(
            f"{method}: reported value {value} != recomputed objective {recomputed}"
        )
    return Solution(edges, subgraph_degrees(inst.h, edges), value, method, diag)
