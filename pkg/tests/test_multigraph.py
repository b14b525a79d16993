import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import gf2_in_span, graphs
from quadmenger.fixtures import counterexample
from quadmenger.multigraph import (
    LoopRejected,
    MultiGraph,
    ParseError,
    Terminals,
    UnknownEdge,
    UnknownVertex,
    format_graph,
    parse_graph,
)


def test_parallel_edges_get_distinct_ids():
    g = MultiGraph(2)
    e1 = g.add_edge(0, 1)
    e2 = g.add_edge(0, 1)
    assert e1 != e2
    assert g.endpoints(e1) == g.endpoints(e2) == (0, 1)


def test_loops_rejected():
    g = MultiGraph(2)
    with pytest.raises(LoopRejected):
        g.add_edge(1, 1)


def test_unknown_vertex_rejected():
    g = MultiGraph(2)
    with pytest.raises(UnknownVertex):
        g.add_edge(0, 7)
    with pytest.raises(UnknownVertex):
        g.degree(2)


def test_counterexample_builds():
    g, t = counterexample()
    assert g.num_vertices == 6
    assert g.num_edges == 7
    assert t.vertices == (0, 1, 2, 3)


def test_degrees_on_counterexample():
    g, _ = counterexample()
    assert g.degree(4) == 3
    assert g.degree(5) == 3
    for v in range(4):
        assert g.degree(v) == 2


def test_degree_isolated_vertex():
    g = MultiGraph(3)
    g.add_edge(0, 1)
    assert g.degree(2) == 0


def test_delete_nothing_is_identity():
    g, _ = counterexample()
    assert g.delete_edges(()) == g


def test_delete_keeps_counterexample_connected():
    g, _ = counterexample()
    assert len(g.delete_edges((6,)).connected_components()) == 1


def test_delete_unknown_edge():
    g = MultiGraph(2)
    g.add_edge(0, 1)
    with pytest.raises(UnknownEdge):
        g.delete_edges((5,))


def test_delete_all_edges_at_one_vertex_of_k4():
    g = MultiGraph(4)
    at_zero = []
    for u in range(4):
        for w in range(u + 1, 4):
            eid = g.add_edge(u, w)
            if u == 0:
                at_zero.append(eid)
    comps = g.delete_edges(at_zero).connected_components()
    assert comps == [frozenset({0}), frozenset({1, 2, 3})]


def test_deletion_preserves_surviving_ids_and_never_reuses():
    g = MultiGraph(3)
    a = g.add_edge(0, 1)
    b = g.add_edge(1, 2)
    smaller = g.delete_edges((a,))
    assert smaller.edge_ids() == [b]
    assert smaller.endpoints(b) == (1, 2)
    fresh = smaller.add_edge(0, 1)
    assert fresh not in (a, b)


def test_components_edgeless():
    g = MultiGraph(3)
    assert g.connected_components() == [frozenset({0}), frozenset({1}), frozenset({2})]


def test_components_two_disjoint_edges():
    g = MultiGraph(4)
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    assert g.connected_components() == [frozenset({0, 1}), frozenset({2, 3})]


def test_components_counterexample_single_block():
    g, _ = counterexample()
    assert g.connected_components() == [frozenset(range(6))]


@given(graphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.num_edges


@given(graphs(max_vertices=6, max_edges=9))
def test_connectivity_matches_boundary_solvability(g):
    # u,w share a component exactly when u+w is a boundary image: solve
    # the incidence system over GF(2) instead of trusting the union-find.
    columns = []
    for eid in g.edge_ids():
        u, w = g.endpoints(eid)
        columns.append((1 << u) | (1 << w))
    comp_of = {}
    for comp in g.connected_components():
        for v in comp:
            comp_of[v] = min(comp)
    for u in g.vertices:
        for w in g.vertices:
            if u >= w:
                continue
            same = comp_of[u] == comp_of[w]
            solvable = gf2_in_span(columns, (1 << u) | (1 << w))
            assert same == solvable


@given(graphs())
def test_delete_and_readd_restores_degrees(g):
    eids = g.edge_ids()
    if not eids:
        return
    victims = eids[:: 2]
    rebuilt = g.delete_edges(victims)
    for eid in victims:
        rebuilt.add_edge(*g.endpoints(eid))
    for v in g.vertices:
        assert rebuilt.degree(v) == g.degree(v)


def test_terminals_validation():
    with pytest.raises(ValueError):
        Terminals.of(0, 1, 2, 2)
    t = Terminals.of(3, 1, 4, 0)
    assert list(t) == [3, 1, 4, 0]
    assert 4 in t and 2 not in t
    with pytest.raises(UnknownVertex):
        t.require_in(MultiGraph(3))


# -- text format ---------------------------------------------------------


def test_format_parse_round_trip():
    g, t = counterexample()
    text = format_graph(g, t)
    g2, t2 = parse_graph(text)
    assert g2 == g
    assert t2 == t
    assert g2.edge_ids() == g.edge_ids()


def test_parse_comments_and_blanks():
    g, t = parse_graph("# hello\n\nv 2\ne 0 1   # parallel\ne 0 1\n")
    assert g.num_edges == 2
    assert t is None


@pytest.mark.parametrize(
    "text",
    [
        "e 0 1",  # edge before v
        "v 2\ne 0 2",  # index out of range
        "v 2\ne 0 0",  # loop
        "v 2\nv 2",  # duplicate v
        "v 5\nt 0 1 2 2",  # repeated terminal
        "v 5\nt 0 1 2",  # short t record
        "v 2\nq 1",  # unknown record
        "v two",  # bad integer
        "",  # no v record
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)
