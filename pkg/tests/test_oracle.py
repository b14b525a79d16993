import random

import pytest

from quadmenger.fixtures import counterexample
from quadmenger.multigraph import MultiGraph, Terminals
from quadmenger.oracle import (
    InstanceSpec,
    SpecInvalid,
    TooLarge,
    brute_destroying_deletion,
    brute_disjoint_chain_count,
    brute_max_packing,
    brute_resilience,
    gen_instance,
    random_augment_plan,
)
from quadmenger.packing import augment_odd, AugmentPlan


def test_brute_resilience_counterexample():
    g, t = counterexample()
    assert brute_resilience(g, t) == 2


def test_brute_resilience_edgeless():
    g = MultiGraph(4)
    assert brute_resilience(g, Terminals.of(0, 1, 2, 3)) == 0


def test_brute_resilience_k4():
    g = MultiGraph(4)
    for u in range(4):
        for w in range(u + 1, 4):
            g.add_edge(u, w)
    assert brute_resilience(g, Terminals.of(0, 1, 2, 3)) == 3


def test_brute_max_packing_counterexample():
    g, t = counterexample()
    assert brute_max_packing(g, t) == 1


def test_brute_max_packing_augmented_counterexample():
    g, t = counterexample()
    gn = augment_odd(g, t, AugmentPlan(((4, 5),)))
    assert brute_max_packing(gn, t) == 2


def test_brute_max_packing_two_disjoint_edges():
    g = MultiGraph(4)
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    assert brute_max_packing(g, Terminals.of(0, 1, 2, 3)) == 1


def test_brute_pair_count_parallel_edges():
    g = MultiGraph(2)
    for _ in range(3):
        g.add_edge(0, 1)
    assert brute_disjoint_chain_count(g, {0, 1}) == 3
    assert brute_destroying_deletion(g, {0, 1}) == 3


def test_size_cap():
    g = MultiGraph(3)
    for _ in range(6):
        g.add_edge(0, 1)
    with pytest.raises(TooLarge):
        brute_destroying_deletion(g, {0, 1}, max_edges=5)
    with pytest.raises(TooLarge):
        brute_disjoint_chain_count(g, {0, 1}, max_edges=5)


def test_gen_instance_deterministic():
    spec = InstanceSpec(seed=123)
    a_graph, a_t = gen_instance(spec)
    b_graph, b_t = gen_instance(spec)
    assert a_graph == b_graph
    assert a_t == b_t


def test_gen_instance_even_interior_rule():
    for seed in range(40):
        g, t = gen_instance(InstanceSpec(seed=seed, parity_rule="even-interior"))
        for v in g.vertices:
            if v not in t:
                assert g.degree(v) % 2 == 0


def test_gen_instance_respects_bounds():
    for seed in range(100):
        spec = InstanceSpec(seed=seed, min_vertices=5, max_vertices=9, min_edges=3, max_edges=12)
        g, t = gen_instance(spec)
        assert 5 <= g.num_vertices <= 9
        assert g.num_edges <= 12
        assert all(0 <= v < g.num_vertices for v in t)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"min_vertices": 3},
        {"max_vertices": 40},
        {"min_edges": 9, "max_edges": 5},
        {"max_edges": 99},
        {"terminal_rule": "corners"},
        {"parity_rule": "odd"},
    ],
)
def test_spec_validation(kwargs):
    with pytest.raises(SpecInvalid):
        gen_instance(InstanceSpec(seed=0, **kwargs))


def test_random_plans_cover_each_odd_vertex_once():
    g, t = counterexample()
    rng = random.Random(5)
    for _ in range(20):
        plan = random_augment_plan(g, t, rng)
        hits = {4: 0, 5: 0}
        for a, b in plan.new_edges:
            for x in (a, b):
                if x in hits:
                    hits[x] += 1
        assert hits == {4: 1, 5: 1}
        augment_odd(g, t, plan)  # must not raise
