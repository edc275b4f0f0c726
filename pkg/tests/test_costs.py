import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq import (
    FunctionClass,
    Graph,
    Instance,
    VertexCostFunction,
    classify,
    from_closed_form,
    objective,
)
from degseq.errors import InvalidFunctionError

from conftest import random_instance


def test_classify_parabola():
    flags = classify(VertexCostFunction((1, 0, 1)))
    assert flags & FunctionClass.CONVEX
    assert not flags & FunctionClass.NONDECREASING
    assert not flags & FunctionClass.NONINCREASING


def test_classify_concave_nondecreasing():
    flags = classify(VertexCostFunction((0, 2, 2)))
    assert flags & FunctionClass.NONDECREASING
    assert not flags & FunctionClass.CONVEX


def test_classify_short_tables_vacuous():
    flags = classify(VertexCostFunction((5, 5)))
    assert flags & FunctionClass.CONVEX
    assert flags & FunctionClass.NONDECREASING
    assert flags & FunctionClass.NONINCREASING


def test_classify_matches_finite_differences_exhaustively():
    # Agreement with direct first-difference checks on all short tables.
    for length in range(1, 5):
        for values in product(range(-3, 4), repeat=length):
            f = VertexCostFunction(values)
            diffs = [values[k + 1] - values[k] for k in range(length - 1)]
            assert bool(classify(f) & FunctionClass.CONVEX) == (diffs == sorted(diffs))
            assert bool(classify(f) & FunctionClass.NONDECREASING) == all(
                d >= 0 for d in diffs
            )
            assert bool(classify(f) & FunctionClass.NONINCREASING) == all(
                d <= 0 for d in diffs
            )


def test_objective_example1(example1):
    assert objective(example1, {(1, 2), (2, 3)}) == 0
    assert objective(example1, set()) == 6
    assert objective(example1, example1.h.edges) == 2


def test_objective_rejects_foreign_edges(example1):
    with pytest.raises(InvalidFunctionError):
        objective(example1, {(1, 4)})


def test_objective_extremes():
    rng = random.Random(7)
    for _ in range(30):
        inst = random_instance(rng, rng.randint(1, 7))
        n = inst.h.n
        assert objective(inst, set()) == sum(inst.f(i)(0) for i in range(1, n + 1))
        assert objective(inst, inst.h.edges) == sum(
            inst.f(i)(inst.h.degree(i)) for i in range(1, n + 1)
        )


def test_from_closed_form():
    assert from_closed_form("(x-2)^2", 3).values == (4, 1, 0)
    assert from_closed_form("x*(3-x)", 4).values == (0, 2, 2, 0)
    assert from_closed_form("0", 2).values == (0, 0)


def test_from_closed_form_errors():
    with pytest.raises(InvalidFunctionError):
        from_closed_form("x/2", 2)  # 1/2 is not an integer
    with pytest.raises(InvalidFunctionError):
        from_closed_form("x +", 2)
    with pytest.raises(InvalidFunctionError):
        from_closed_form("x", 0)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=8))
@settings(max_examples=200)
def test_classify_flags_are_consistent(values):
    f = VertexCostFunction(tuple(values))
    flags = classify(f)
    if flags & FunctionClass.NONDECREASING and flags & FunctionClass.NONINCREASING:
        assert len(set(values)) == 1  # both directions only for constants
    if len(values) <= 2:
        assert flags & FunctionClass.CONVEX


@given(st.randoms(use_true_random=False))
@settings(max_examples=100)
def test_objective_depends_only_on_degrees(rnd):
    inst = random_instance(random.Random(rnd.randint(0, 10**9)), 6)
    edges = inst.h.sorted_edges()
    sub = [e for e in edges if rnd.random() < 0.5]
    shuffled = list(sub)
    rnd.shuffle(shuffled)
    assert objective(inst, sub) == objective(inst, shuffled)


def test_instance_table_lengths_enforced():
    g = Graph.from_edges(2, [(1, 2)])
    with pytest.raises(InvalidFunctionError):
        Instance(g, (VertexCostFunction((0,)), VertexCostFunction((0, 1))))


def test_isolated_vertex_single_entry_table():
    g = Graph.from_edges(2, [])
    inst = Instance(g, (VertexCostFunction((7,)), VertexCostFunction((3,))))
    assert objective(inst, set()) == 10
