import random

import pytest

from degseq import (
    BipartitePartition,
    Graph,
    Instance,
    VertexCostFunction,
    tables_for_graph,
)


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_table(rng: random.Random, size: int, lo: int = -10, hi: int = 10):
    return VertexCostFunction(tuple(rng.randint(lo, hi) for _ in range(size)))


def random_convex_table(rng: random.Random, size: int, lo: int = -10, hi: int = 10):
    """Random integer table with nondecreasing first differences."""
    while True:
        diffs = sorted(rng.randint(-4, 4) for _ in range(size - 1))
        v = rng.randint(lo, hi)
        values = [v]
        for d in diffs:
            v += d
            values.append(v)
        if all(lo <= x <= hi for x in values):
            return VertexCostFunction(tuple(values))


def random_monotone_table(rng: random.Random, size: int, nondecreasing: bool):
    steps = [rng.randint(0, 3) for _ in range(size - 1)]
    v = rng.randint(-10, 10)
    values = [v]
    for s in steps:
        v += s if nondecreasing else -s
        values.append(v)
    return VertexCostFunction(tuple(values))


def random_instance(rng: random.Random, n: int, table_maker=random_table, p: float = 0.4):
    g = random_graph(rng, n, p)
    funcs = tuple(table_maker(rng, g.degree(i) + 1) for i in range(1, n + 1))
    return Instance(g, funcs)


def random_bipartite_instance(rng: random.Random, r: int, s: int, p: float = 0.5):
    edges = [
        (i, r + j) for i in range(1, r + 1) for j in range(1, s + 1)
        if rng.random() < p
    ]
    g = Graph.from_edges(r + s, edges)
    funcs = tuple(random_table(rng, g.degree(i) + 1) for i in range(1, g.n + 1))
    part = BipartitePartition(tuple(range(1, r + 1)), tuple(range(r + 1, r + s + 1)))
    return Instance(g, funcs), part


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def example1(triangle):
    """Triangle with parabola costs centered at 1, 2, 1."""
    from degseq import from_closed_form

    return Instance(
        triangle,
        (
            from_closed_form("(x-1)^2", 3),
            from_closed_form("(x-2)^2", 3),
            from_closed_form("(x-1)^2", 3),
        ),
    )


@pytest.fixture
def example2():
    """Bipartite path-like graph whose unique perfect matching is optimal."""
    g = Graph.from_edges(4, [(1, 3), (2, 3), (2, 4)])
    return Instance(g, tables_for_graph(g, "(x-1)^2"))


@pytest.fixture
def example2_partition():
    return BipartitePartition((1, 2), (3, 4))
