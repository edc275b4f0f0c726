import random

import pytest

from degseq import (
    BipartitePartition,
    Graph,
    Instance,
    VertexCostFunction,
    brute_force,
    build_dp,
    objective,
    solve_bipartite,
    tables_for_graph,
)
from degseq.dp import dp_to_dot, full_state_count
from degseq.errors import NotBipartiteError, StateBudgetExceededError
from degseq.graph import subgraph_degrees

from conftest import random_bipartite_instance


def k33():
    g = Graph.from_edges(6, [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)])
    return Instance(g, tables_for_graph(g, "(x-1)^2"))


def test_full_node_count_example2(example2, example2_partition):
    dp = build_dp(example2, example2_partition)
    assert dp.full_node_count == 2 + 2 * (2 * 3) == 14


def test_full_node_count_k33():
    inst = k33()
    part = BipartitePartition((1, 2, 3), (4, 5, 6))
    dp = build_dp(inst, part)
    assert dp.full_node_count == 2 + 3 * 4**3 == 194


def test_edgeless_dp():
    g = Graph.from_edges(3, [])
    inst = Instance(g, tuple(VertexCostFunction((c,)) for c in (1, 2, 3)))
    part = BipartitePartition((1,), (2, 3))
    dp = build_dp(inst, part)
    # Only the zero state is reachable in each layer.
    assert [sorted(layer) for layer in dp.layers] == [[(0,)], [(0,)], [(0,)]]
    assert dp.sink_dist == 6


def test_solve_example2(example2, example2_partition):
    sol = solve_bipartite(example2, example2_partition)
    assert sol.value == 0
    assert sol.edges == {(1, 3), (2, 4)}


def test_all_zero_functions(example2_partition):
    g = Graph.from_edges(4, [(1, 3), (2, 3), (2, 4)])
    inst = Instance(g, tables_for_graph(g, "0"))
    assert solve_bipartite(inst, example2_partition).value == 0


def test_star_nonincreasing_center():
    g = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
    inst = Instance(
        g,
        (
            VertexCostFunction((3, 2, 1, 0)),
            VertexCostFunction((0, 1)),
            VertexCostFunction((0, 1)),
            VertexCostFunction((0, 1)),
        ),
    )
    part = BipartitePartition((1,), (2, 3, 4))
    sol = solve_bipartite(inst, part)
    # Both the empty graph and the full star score 3; value is what matters.
    assert sol.value == brute_force(inst).optimum == 3


def test_not_bipartite_rejected(example1):
    with pytest.raises(NotBipartiteError):
        solve_bipartite(example1, BipartitePartition((1,), (2, 3)))


def test_orientation_swap_warns():
    g = Graph.from_edges(3, [(1, 3), (2, 3)])
    inst = Instance(
        g,
        (
            VertexCostFunction((0, 1)),
            VertexCostFunction((0, 1)),
            VertexCostFunction((0, 1, 2)),
        ),
    )
    with pytest.warns(UserWarning, match="swapping"):
        sol = solve_bipartite(inst, BipartitePartition((1, 2), (3,)))
    assert sol.value == 0


def test_state_budget_guard():
    inst = k33()
    with pytest.raises(StateBudgetExceededError):
        build_dp(inst, BipartitePartition((1, 2, 3), (4, 5, 6)), state_budget=100)


def test_oracle_equivalence_random():
    rng = random.Random(9)
    for _ in range(150):
        inst, part = random_bipartite_instance(rng, rng.randint(0, 3), rng.randint(1, 5))
        sol = solve_bipartite(inst, part)
        assert sol.value == brute_force(inst).optimum
        assert sol.value == objective(inst, sol.edges)


def test_path_decode_consistency():
    rng = random.Random(10)
    for _ in range(50):
        inst, part = random_bipartite_instance(rng, rng.randint(1, 3), rng.randint(1, 4))
        dp = build_dp(inst, part)
        chain = dp.shortest_path_states()
        degs = subgraph_degrees(inst.h, solve_bipartite(inst, part).edges)
        # Final state equals the I-side degree vector of the decoded graph.
        final = chain[-1]
        for p, iv in enumerate(dp.i_vertices):
            assert final[p] == degs[iv - 1]
        # Each arc raises the accumulated degrees by the chosen neighborhood.
        for k in range(1, len(chain)):
            diff = [chain[k][p] - chain[k - 1][p] for p in range(len(dp.i_vertices))]
            assert all(d in (0, 1) for d in diff)


def test_size_formula_random():
    rng = random.Random(11)
    for _ in range(60):
        inst, part = random_bipartite_instance(rng, rng.randint(0, 3), rng.randint(1, 4))
        dp = build_dp(inst, part)
        caps = [inst.h.degree(i) for i in dp.i_vertices]
        assert dp.full_node_count == full_state_count(len(dp.stages), caps)


def test_dot_export(example2, example2_partition):
    dp = build_dp(example2, example2_partition)
    dot = dp_to_dot(dp)
    assert dot.startswith("digraph dp {")
    assert "source" in dot and "sink" in dot
    assert "color=red" in dot
