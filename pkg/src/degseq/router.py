"""Dispatch an instance to the solvers whose preconditions it satisfies."""

from __future__ import annotations

import math

from .convex import solve_convex
from .costs import FunctionClass, Instance, classify
from .dp import DEFAULT_STATE_BUDGET, solve_bipartite
from .errors import MethodInapplicableError, MixedMonotonicityError
from .graph import BipartitePartition, check_bipartite, find_bipartition
from .monotone import reduce_monotone, solve_monotone
from .oracle import DEFAULT_ORACLE_LIMIT, solve_brute
from .serialize import LoadedInstance
from .solution import Solution

METHOD_ORDER = ("convex", "bipartite", "monotone", "brute")


def _dp_size_ok(inst: Instance, left, num_stages: int, budget: int) -> bool:
    states = num_stages * math.prod(inst.h.degree(i) + 1 for i in left)
    return states <= budget


def usable_partition(loaded: LoadedInstance) -> BipartitePartition | None:
    """The file's partition if valid, else a derived 2-coloring, else None."""
    inst = loaded.instance
    if loaded.partition is not None:
        return loaded.partition if check_bipartite(inst.h, loaded.partition) else None
    return find_bipartition(inst.h)


def applicable_methods(
    loaded: LoadedInstance,
    state_budget: int = DEFAULT_STATE_BUDGET,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> dict[str, str]:
    """Map of applicable method name -> short reason; empty reason if fine.

    "No polynomial method" is a legitimate outcome: the returned map may
    contain only "brute", or nothing at all.
    """
    inst = loaded.instance
    report: dict[str, str] = {}

    if all(classify(f) & FunctionClass.CONVEX for f in inst.functions):
        report["convex"] = "all functions convex"

    part = usable_partition(loaded)
    if part is not None:
        left = part.left if len(part.left) <= len(part.right) else part.right
        right = part.right if len(part.left) <= len(part.right) else part.left
        if _dp_size_ok(inst, left, len(right), state_budget):
            report["bipartite"] = f"bipartite with fixed side of size {len(left)}"

    fixed = loaded.fixed_set
    if fixed is None and all(
        classify(f) & (FunctionClass.NONDECREASING | FunctionClass.NONINCREASING)
        for f in inst.functions
    ):
        # Uniformly monotone direction exists with an empty fixed set.
        if all(classify(f) & FunctionClass.NONDECREASING for f in inst.functions):
            fixed = ()
        elif all(classify(f) & FunctionClass.NONINCREASING for f in inst.functions):
            fixed = ()
    if fixed is not None:
        try:
            red = reduce_monotone(inst, fixed)
        except MixedMonotonicityError:
            red = None
        if red is not None:
            stages = len(red.free) + len(red.intra_i_edges)
            if _dp_size_ok(inst, red.fixed, max(stages, 1), state_budget):
                report["monotone"] = (
                    f"{red.direction.value} free side of size {len(red.free)}"
                )

    if inst.h.num_edges <= oracle_limit:
        report["brute"] = f"2^{inst.h.num_edges} subgraphs enumerable"
    return report


def solve_auto(
    loaded: LoadedInstance,
    method: str = "auto",
    state_budget: int = DEFAULT_STATE_BUDGET,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
) -> Solution:
    """Solve with an explicit method, or the first applicable one in order
    convex -> bipartite -> monotone -> brute."""
    applicable = applicable_methods(loaded, state_budget, oracle_limit)
    if method == "auto":
        for m in METHOD_ORDER:
            if m in applicable:
                method = m
                break
        else:
            raise MethodInapplicableError(
                "no applicable method: functions are not all convex, the graph "
                "is not tractably bipartite, no uniform monotone free side, "
                "and the instance exceeds the brute-force limit"
            )
    if method not in applicable:
        raise MethodInapplicableError(
            f"method {method!r} does not apply to this instance"
        )
    inst = loaded.instance
    if method == "convex":
        return solve_convex(inst)
    if method == "bipartite":
        return solve_bipartite(inst, usable_partition(loaded), state_budget)
    if method == "monotone":
        fixed = loaded.fixed_set if loaded.fixed_set is not None else ()
        return solve_monotone(inst, fixed, state_budget)
    return solve_brute(inst, oracle_limit)
