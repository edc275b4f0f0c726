"""degseq command line front-end.

    degseq solve <file> [--method M] [--out F]
    degseq classify <file>
    degseq reduce <kind> <spec> --out F
    degseq export-dot <file> --target {aux,dp} --out F

Exit codes: 0 success, 1 infeasible / no applicable method, 2 input
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .convex import aux_graph_to_dot, build_aux_graph, solve_convex
from .dp import DEFAULT_STATE_BUDGET, build_dp, dp_to_dot
from .errors import (
    DegseqError,
    InternalError,
    MethodInapplicableError,
    NonConvexFunctionError,
    NotBipartiteError,
)
from .matching import min_cost_perfect_matching
from .graph import BipartitePartition, Graph
from .oracle import DEFAULT_ORACLE_LIMIT
from .reductions import (
    ExactMatchingSpec,
    FactorSpec,
    LUFactorSpec,
    encode_exact_matching,
    encode_factor,
    encode_lu_factor,
    gen_hardness_instance,
)
from .router import applicable_methods, solve_auto, usable_partition
from .serialize import (
    LoadedInstance,
    load_instance,
    save_instance,
    save_solution,
    solution_to_dict,
)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DegseqError(f"environment variable {name}={raw!r} is not an integer")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Exact solvers for degree-sequence optimization over subgraphs.",
    )
    parser.add_argument(
        "--state-budget",
        type=int,
        default=None,
        help="max DP states (env DEGSEQ_STATE_BUDGET, default %d)" % DEFAULT_STATE_BUDGET,
    )
    parser.add_argument(
        "--oracle-limit",
        type=int,
        default=None,
        help="max |E| for brute force (env DEGSEQ_ORACLE_LIMIT, default %d)"
        % DEFAULT_ORACLE_LIMIT,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("file")
    p_solve.add_argument(
        "--method",
        choices=["auto", "convex", "bipartite", "monotone", "brute"],
        default="auto",
    )
    p_solve.add_argument("--out", help="write the solution JSON here")

    p_classify = sub.add_parser("classify", help="report applicable methods")
    p_classify.add_argument("file")

    p_reduce = sub.add_parser("reduce", help="encode a special case as an instance")
    p_reduce.add_argument(
        "kind", choices=["factor", "lu", "exact-matching", "hardness"]
    )
    p_reduce.add_argument("spec")
    p_reduce.add_argument("--out", required=True)

    p_dot = sub.add_parser("export-dot", help="export aux graph or DP digraph")
    p_dot.add_argument("file")
    p_dot.add_argument("--target", choices=["aux", "dp"], required=True)
    p_dot.add_argument("--out", required=True)
    return parser


def _load(path: str) -> LoadedInstance:
    if not os.path.exists(path):
        raise DegseqError(f"no such file: {path}")
    return load_instance(path)


def cmd_solve(args, state_budget, oracle_limit) -> int:
    loaded = _load(args.file)
    try:
        sol = solve_auto(loaded, args.method, state_budget, oracle_limit)
    except MethodInapplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    doc = solution_to_dict(loaded.instance, sol)
    if args.out:
        save_solution(loaded.instance, sol, args.out)
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_classify(args, state_budget, oracle_limit) -> int:
    loaded = _load(args.file)
    report = applicable_methods(loaded, state_budget, oracle_limit)
    if not report:
        print("no applicable method (problem class with open complexity)")
        return EXIT_INFEASIBLE
    for method, reason in report.items():
        print(f"{method}: {reason}")
    return EXIT_OK


def _read_json(path: str) -> dict:
    if not os.path.exists(path):
        raise DegseqError(f"no such file: {path}")
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DegseqError(f"spec file {path}: {exc}")


def cmd_reduce(args, state_budget, oracle_limit) -> int:
    data = _read_json(args.spec)
    sidecar: dict = {"kind": args.kind}
    part = None
    fixed = None
    if args.kind in ("factor", "lu", "hardness"):
        g = Graph.from_edges(data["n"], [tuple(e) for e in data.get("edges", [])])
    if args.kind == "factor":
        spec = FactorSpec(g, tuple(frozenset(b) for b in data["allowed"]))
        inst = encode_factor(spec)
        sidecar["allowed"] = [sorted(b) for b in spec.allowed]
    elif args.kind == "lu":
        spec = LUFactorSpec(g, tuple(data["lower"]), tuple(data["upper"]))
        inst = encode_lu_factor(spec)
        sidecar["lower"] = list(spec.lower)
        sidecar["upper"] = list(spec.upper)
    elif args.kind == "exact-matching":
        coloring = {
            (i + 1, j + 1): data["coloring"][i][j]
            for i in range(data["n"])
            for j in range(data["n"])
        }
        spec = ExactMatchingSpec(data["n"], data["r"], tuple(data["target"]), coloring)
        enc = encode_exact_matching(spec)
        inst = enc.instance
        sidecar.update(
            {
                "n": spec.n,
                "r": spec.r,
                "target": list(spec.target),
                "numbering": "u_1..u_n, v_1..v_n, w_(i,j) row-major, x_1..x_r",
                "w_base": 2 * spec.n,
            }
        )
    else:  # hardness
        if "partition" in data:
            part = BipartitePartition(
                tuple(data["partition"]["left"]), tuple(data["partition"]["right"])
            )
        inst = gen_hardness_instance(data["kind"], g, part)
        sidecar["hardness_kind"] = data["kind"]
    save_instance(LoadedInstance(inst, part, fixed), args.out)
    with open(args.out + ".decode.json", "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")
    print(f"wrote {args.out} ({inst.h.n} vertices, {inst.h.num_edges} edges)")
    return EXIT_OK


def cmd_export_dot(args, state_budget, oracle_limit) -> int:
    loaded = _load(args.file)
    inst = loaded.instance
    try:
        if args.target == "aux":
            aux = build_aux_graph(inst)
            matching = min_cost_perfect_matching(aux.costed)
            text = aux_graph_to_dot(aux, matching)
        else:
            part = usable_partition(loaded)
            if part is None:
                raise NotBipartiteError("instance is not bipartite")
            dp = build_dp(inst, part, state_budget)
            text = dp_to_dot(dp)
    except (NonConvexFunctionError, NotBipartiteError) as exc:
        raise MethodInapplicableError(str(exc))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        state_budget = (
            args.state_budget
            if args.state_budget is not None
            else _env_int("DEGSEQ_STATE_BUDGET", DEFAULT_STATE_BUDGET)
        )
        oracle_limit = (
            args.oracle_limit
            if args.oracle_limit is not None
            else _env_int("DEGSEQ_ORACLE_LIMIT", DEFAULT_ORACLE_LIMIT)
        )
        handler = {
            "solve": cmd_solve,
            "classify": cmd_classify,
            "reduce": cmd_reduce,
            "export-dot": cmd_export_dot,
        }[args.command]
        return handler(args, state_budget, oracle_limit)
    except MethodInapplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DegseqError, KeyError, TypeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
