"""JSON instance and solution files.

Instance schema:
    {"n": 3, "edges": [[1,2],[2,3]], "functions": [[...], ...],
     "partition": {"left": [...], "right": [...]},   # optional
     "fixed_set": [...]}                             # optional

Solution schema:
    {"value": 0, "edges": [[1,2]], "degrees": [1,1,0],
     "method": "convex", "diagnostics": {...}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .costs import Instance, VertexCostFunction, objective
from .errors import DegseqError, InternalError
from .graph import BipartitePartition, Graph
from .solution import Solution


@dataclass(frozen=True)
class LoadedInstance:
    instance: Instance
    partition: BipartitePartition | None
    fixed_set: tuple[int, ...] | None


def _require(cond: bool, msg: str):
    if not cond:
        raise DegseqError(f"instance file: {msg}")


def instance_from_dict(data: dict) -> LoadedInstance:
    _require(isinstance(data, dict), "top level must be an object")
    _require(isinstance(data.get("n"), int), 'field "n" must be an integer')
    n = data["n"]
    edges = data.get("edges", [])
    _require(
        isinstance(edges, list)
        and all(isinstance(e, list) and len(e) == 2 for e in edges),
        'field "edges" must be a list of [i, j] pairs',
    )
    g = Graph.from_edges(n, [tuple(e) for e in edges])

    raw_funcs = data.get("functions")
    _require(
        isinstance(raw_funcs, list) and len(raw_funcs) == n,
        f'field "functions" must be a list of {n} integer arrays',
    )
    funcs = []
    for i, table in enumerate(raw_funcs, start=1):
        _require(
            isinstance(table, list) and all(isinstance(v, int) for v in table),
            f"functions[{i}] must be an integer array",
        )
        funcs.append(VertexCostFunction(tuple(table)))
    inst = Instance(g, tuple(funcs))

    part = None
    if "partition" in data:
        p = data["partition"]
        _require(
            isinstance(p, dict) and "left" in p and "right" in p,
            'field "partition" must have "left" and "right"',
        )
        part = BipartitePartition(tuple(p["left"]), tuple(p["right"]))

    fixed = None
    if "fixed_set" in data:
        _require(
            isinstance(data["fixed_set"], list),
            'field "fixed_set" must be a list of vertices',
        )
        fixed = tuple(data["fixed_set"])
    return LoadedInstance(inst, part, fixed)


def instance_to_dict(loaded: LoadedInstance) -> dict:
    inst = loaded.instance
    data = {
        "n": inst.h.n,
        "edges": [list(e) for e in inst.h.sorted_edges()],
        "functions": [list(f.values) for f in inst.functions],
    }
    if loaded.partition is not None:
        data["partition"] = {
            "left": list(loaded.partition.left),
            "right": list(loaded.partition.right),
        }
    if loaded.fixed_set is not None:
        data["fixed_set"] = list(loaded.fixed_set)
    return data


def load_instance(path: str) -> LoadedInstance:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DegseqError(f"instance file {path}: {exc}")
    return instance_from_dict(data)


def save_instance(loaded: LoadedInstance, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(loaded), fh, indent=2)
        fh.write("\n")


def solution_to_dict(inst: Instance, sol: Solution) -> dict:
    # Self-verification: never write a value the edges do not reproduce.
    if objective(inst, sol.edges) != sol.value:
        raise InternalError("solution value does not match its own edge set")
    return {
        "value": sol.value,
        "edges": [list(e) for e in sorted(sol.edges)],
        "degrees": list(sol.degrees),
        "method": sol.method,
        "diagnostics": sol.diagnostics,
    }


def save_solution(inst: Instance, sol: Solution, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(solution_to_dict(inst, sol), fh, indent=2)
        fh.write("\n")
