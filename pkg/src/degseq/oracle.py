"""Exhaustive reference solver over all 2^|E| subgraphs.

Ground truth for every polynomial solver at desk scale. Subsets are
walked in Gray-code order with O(1) incremental objective updates, but
the reported witness is the first optimal subset in plain increasing
binary order over the lexicographically sorted edge list.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .costs import Instance
from .errors import TooLargeError
from .graph import Edge
from .solution import Solution, make_solution

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

DEFAULT_ORACLE_LIMIT = 22


@dataclass(frozen=True)
class OracleReport:
    optimum: int
    witness: frozenset[Edge]
    num_optima: int
    enumerated: int


def _enumerate_py(ends_a, ends_b, tables, offsets, m):
    deg = [0] * (len(offsets) - 1)
    value = sum(tables[offsets[v]] for v in range(len(deg)))
    best, best_mask, num_optima = value, 0, 1
    mask = 0
    for step in range(1, 1 << m):
        bit = (step & -step).bit_length() - 1  # Gray code: flip this edge
        mask ^= 1 << bit
        delta = 1 if mask >> bit & 1 else -1
        for v in (ends_a[bit], ends_b[bit]):
            value -= tables[offsets[v] + deg[v]]
            deg[v] += delta
            value += tables[offsets[v] + deg[v]]
        if value < best:
            best, best_mask, num_optima = value, mask, 1
        elif value == best:
            num_optima += 1
            if mask < best_mask:
                best_mask = mask
    return best, best_mask, num_optima


if njit is not None:

    @njit(cache=True)
    def _enumerate_fast(ends_a, ends_b, tables, offsets, m):  # pragma: no cover
        n = len(offsets) - 1
        deg = np.zeros(n, dtype=np.int64)
        value = np.int64(0)
        for v in range(n):
            value += tables[offsets[v]]
        best, best_mask, num_optima = value, np.int64(0), np.int64(1)
        mask = np.int64(0)
        for step in range(1, 1 << m):
            bit = 0
            while not (step >> bit) & 1:
                bit += 1
            mask ^= np.int64(1) << bit
            delta = 1 if (mask >> bit) & 1 else -1
            for v in (ends_a[bit], ends_b[bit]):
                value -= tables[offsets[v] + deg[v]]
                deg[v] += delta
                value += tables[offsets[v] + deg[v]]
            if value < best:
                best, best_mask, num_optima = value, mask, np.int64(1)
            elif value == best:
                num_optima += 1
                if mask < best_mask:
                    best_mask = mask
        return best, best_mask, num_optima

else:  # pragma: no cover
    _enumerate_fast = None


def brute_force(inst: Instance, limit: int = DEFAULT_ORACLE_LIMIT) -> OracleReport:
    """Exact global optimum by full enumeration."""
    m = inst.h.num_edges
    if m > limit:
        raise TooLargeError(2**m, limit)
    edges = inst.h.sorted_edges()
    n = inst.h.n

    offsets = [0]
    tables: list[int] = []
    for i in range(1, n + 1):
        tables.extend(inst.f(i).values)
        offsets.append(len(tables))
    ends_a = [e[0] - 1 for e in edges]
    ends_b = [e[1] - 1 for e in edges]

    # int64 overflow guard for the compiled kernel: the running value is a
    # sum of n table entries, far below 2^63 for any sane input.
    in_range = all(abs(t) < 2**40 for t in tables)
    if _enumerate_fast is not None and m >= 16 and in_range and m < 62:
        best, best_mask, num_optima = _enumerate_fast(
            np.asarray(ends_a, dtype=np.int64),
            np.asarray(ends_b, dtype=np.int64),
            np.asarray(tables, dtype=np.int64),
            np.asarray(offsets, dtype=np.int64),
            m,
        )
        best, best_mask, num_optima = int(best), int(best_mask), int(num_optima)
    else:
        best, best_mask, num_optima = _enumerate_py(ends_a, ends_b, tables, offsets, m)
    witness = frozenset(e for k, e in enumerate(edges) if best_mask >> k & 1)
    return OracleReport(best, witness, num_optima, 1 << m)


def count_optima(inst: Instance, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    return brute_force(inst, limit).num_optima


def solve_brute(inst: Instance, limit: int = DEFAULT_ORACLE_LIMIT) -> Solution:
    """The oracle packaged as a regular solver."""
    report = brute_force(inst, limit)
    return make_solution(
        inst,
        report.witness,
        report.optimum,
        "brute",
        num_optima=report.num_optima,
        enumerated=report.enumerated,
    )
