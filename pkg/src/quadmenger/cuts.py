"""Feasibility, cut resilience, and two-terminal edge connectivity.

A target boundary is reachable exactly when every connected component holds
an even number of target vertices, so destroying it means cutting off a
vertex set with an odd share of the targets. For four targets the cheapest
such cut isolates one terminal from the other three, which reduces
resilience to four unit-capacity min-cut computations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .multigraph import GraphError, MultiGraph, Terminals, UnknownVertex


class OddTargetCount(GraphError):
    """Target sets must have even size."""


@dataclass(frozen=True)
class CutCertificate:
    """Witness for a minimum destroying deletion.

    Deleting `deleted` leaves `witness_component` as a component holding an
    odd number (1 or 3) of the terminals.
    """

    deleted: frozenset[int]
    witness_component: frozenset[int]
    odd_count: int


def feasible(g: MultiGraph, targets: Iterable[int]) -> bool:
    """True when some chain of edges has exactly the targets as boundary.

    Holds iff every connected component contains an even number of targets.
    """
    ts = frozenset(targets)
    if len(ts) % 2:
        raise OddTargetCount(f"target set has odd size {len(ts)}")
    for v in ts:
        if not (0 <= v < g.num_vertices):
            raise UnknownVertex(f"target {v} is not registered")
    return all(len(comp & ts) % 2 == 0 for comp in g.connected_components())


def _edge_connectivity(g: MultiGraph, sources: frozenset[int], sinks: frozenset[int]) -> int:
    """Minimum number of edges whose removal separates sources from sinks.

    Both sides are contracted to single flow nodes; every edge is a pair of
    opposite unit arcs. Plain BFS augmentation, one unit per round.
    """
    node_of: dict[int, int] = {}
    n_nodes = 2
    for v in g.vertices:
        if v in sources:
            node_of[v] = 0
        elif v in sinks:
            node_of[v] = 1
        else:
            node_of[v] = n_nodes
            n_nodes += 1
    adj: list[list[int]] = [[] for _ in range(n_nodes)]
    to: list[int] = []
    cap: list[int] = []

    def arc(a: int, b: int) -> None:
        adj[a].append(len(to))
        to.append(b)
        cap.append(1)
        adj[b].append(len(to))
        to.append(a)
        cap.append(1)

    for eid in g.edge_ids():
        u, w = g.endpoints(eid)
        nu, nw = node_of[u], node_of[w]
        if nu != nw:
            arc(nu, nw)

    value = 0
    while True:
        prev_arc = [-1] * n_nodes
        prev_arc[0] = -2
        queue = deque([0])
        while queue and prev_arc[1] == -1:
            x = queue.popleft()
            for a in adj[x]:
                y = to[a]
                if cap[a] > 0 and prev_arc[y] == -1:
                    prev_arc[y] = a
                    queue.append(y)
        if prev_arc[1] == -1:
            return value
        value += 1
        y = 1
        while y != 0:
            a = prev_arc[y]
            cap[a] -= 1
            cap[a ^ 1] += 1
            y = to[a ^ 1]


def two_terminal_resilience(g: MultiGraph, u: int, v: int) -> int:
    """Largest k such that every deletion of k-1 edges leaves u and v joined.

    Equals the unit-capacity max-flow value between u and v, hence also the
    maximum number of pairwise edge-disjoint u-v paths.
    """
    if u == v:
        raise ValueError("vertices must differ")
    g._check_vertex(u)
    g._check_vertex(v)
    return _edge_connectivity(g, frozenset((u,)), frozenset((v,)))


def resilience_value(g: MultiGraph, t: Terminals) -> int:
    """Minimum number of edge deletions that destroys the terminal boundary.

    0 when the boundary is unreachable already. Otherwise the minimum over
    the four ways of cutting one terminal away from the other three.
    """
    t.require_in(g)
    tset = t.as_set()
    if not feasible(g, tset):
        return 0
    return min(
        _edge_connectivity(g, frozenset((v,)), tset - {v}) for v in t
    )


def resilience(g: MultiGraph, t: Terminals) -> tuple[int, CutCertificate]:
    """Resilience plus a deterministic minimum destroying deletion.

    The certificate is the lexicographically smallest minimizing edge set:
    edges are admitted greedily in ascending id order whenever a completion
    within the remaining budget still exists.
    """
    tset = t.as_set()
    k = resilience_value(g, t)
    if k == 0:
        comp, odd = _odd_witness(g, tset)
        return 0, CutCertificate(frozenset(), comp, odd)
    work = g
    chosen: list[int] = []
    budget = k
    for eid in g.edge_ids():
        if budget == 0:
            break
        trial = work.delete_edges((eid,))
        if resilience_value(trial, t) == budget - 1:
            work = trial
            chosen.append(eid)
            budget -= 1
    comp, odd = _odd_witness(work, tset)
    return k, CutCertificate(frozenset(chosen), comp, odd)


def _odd_witness(g: MultiGraph, tset: frozenset[int]) -> tuple[frozenset[int], int]:
    for comp in g.connected_components():
        inside = len(comp & tset)
        if inside % 2:
            return comp, inside
    raise AssertionError("no odd component in an infeasible graph")
