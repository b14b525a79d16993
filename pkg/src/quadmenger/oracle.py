"""Brute-force ground truth on small instances, plus seeded generators.

Everything here recomputes answers from first principles, by enumerating
raw edge subsets, and shares no machinery with the production algorithms.
That makes it slow and size-capped, and that is the point: it is the
independent referee the fast paths are checked against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .multigraph import GraphError, MultiGraph, Terminals
from .packing import AugmentPlan

DESK_VERTEX_LIMIT = 12
DESK_EDGE_LIMIT = 18


class TooLarge(GraphError):
    """Instance exceeds the brute-force size cap."""


class SpecInvalid(GraphError):
    """Instance recipe is out of the supported desk-scale bounds."""


def _feasible_subset(g: MultiGraph, kept: Iterable[int], targets: frozenset[int]) -> bool:
    # Self-contained feasibility: union the kept edges, look for a
    # component with an odd share of the targets.
    parent = list(range(g.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in kept:
        u, w = g.endpoints(eid)
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[rw] = ru
    share: dict[int, int] = {}
    for v in targets:
        r = find(v)
        share[r] = share.get(r, 0) + 1
    return all(s % 2 == 0 for s in share.values())


def _check_size(g: MultiGraph, max_edges: int) -> None:
    if g.num_edges > max_edges:
        raise TooLarge(f"{g.num_edges} edges exceed the cap of {max_edges}")


def brute_destroying_deletion(
    g: MultiGraph, targets: Iterable[int], max_edges: int = DESK_EDGE_LIMIT
) -> int:
    """Smallest deletion count after which the target boundary is gone.

    Enumerates deletion subsets by increasing size, lexicographically
    within a size, and stops at the first success, so the answer is exact.
    """
    _check_size(g, max_edges)
    ts = frozenset(targets)
    eids = g.edge_ids()
    all_edges = set(eids)
    for size in range(len(eids) + 1):
        for drop in combinations(eids, size):
            if not _feasible_subset(g, all_edges.difference(drop), ts):
                return size
    raise AssertionError("deleting every edge must destroy any even target set")


def brute_resilience(g: MultiGraph, t: Terminals, max_edges: int = DESK_EDGE_LIMIT) -> int:
    """Exact resilience of the four-terminal boundary by full enumeration."""
    t.require_in(g)
    return brute_destroying_deletion(g, t.as_set(), max_edges)


def brute_disjoint_chain_count(
    g: MultiGraph, targets: Iterable[int], max_edges: int = DESK_EDGE_LIMIT
) -> int:
    """Exact maximum family of disjoint chains with the given boundary.

    Candidates are every edge subset with the right boundary and no cycle
    inside (a chain containing a cycle can always be shrunk, so this loses
    nothing). The family search is plain exhaustive backtracking.
    """
    _check_size(g, max_edges)
    ts = frozenset(targets)
    eids = g.edge_ids()
    m = len(eids)
    vbit = []
    for eid in eids:
        u, w = g.endpoints(eid)
        vbit.append((1 << u) | (1 << w))
    target_mask = 0
    for v in ts:
        target_mask |= 1 << v

    bnd = [0] * (1 << m)
    for s in range(1, 1 << m):
        low = s & -s
        bnd[s] = bnd[s ^ low] ^ vbit[low.bit_length() - 1]

    def acyclic(mask: int) -> bool:
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        s = mask
        while s:
            low = s & -s
            s ^= low
            u, w = g.endpoints(eids[low.bit_length() - 1])
            parent.setdefault(u, u)
            parent.setdefault(w, w)
            ru, rw = find(u), find(w)
            if ru == rw:
                return False
            parent[rw] = ru
        return True

    candidates = sorted(
        (s for s in range(1, 1 << m) if bnd[s] == target_mask and acyclic(s)),
        key=lambda s: (bin(s).count("1"), s),
    )

    best = 0

    def grow(idx: int, used: int, have: int) -> None:
        nonlocal best
        if have > best:
            best = have
        for j in range(idx, len(candidates)):
            if have + (len(candidates) - j) <= best:
                break
            if candidates[j] & used:
                continue
            grow(j + 1, used | candidates[j], have + 1)

    grow(0, 0, 0)
    return best


def brute_max_packing(g: MultiGraph, t: Terminals, max_edges: int = DESK_EDGE_LIMIT) -> int:
    """Exact maximum packing of the four-terminal boundary by enumeration."""
    t.require_in(g)
    return brute_disjoint_chain_count(g, t.as_set(), max_edges)


@dataclass(frozen=True)
class InstanceSpec:
    """Deterministic recipe for one random test instance."""

    seed: int
    min_vertices: int = 5
    max_vertices: int = 10
    min_edges: int = 4
    max_edges: int = 14
    terminal_rule: str = "random"  # "random" | "first"
    parity_rule: str = "unconstrained"  # "unconstrained" | "even-interior"

    def validate(self) -> None:
        if not (4 <= self.min_vertices <= self.max_vertices <= DESK_VERTEX_LIMIT):
            raise SpecInvalid(f"vertex bounds {self.min_vertices}..{self.max_vertices} out of range")
        if not (0 <= self.min_edges <= self.max_edges <= DESK_EDGE_LIMIT):
            raise SpecInvalid(f"edge bounds {self.min_edges}..{self.max_edges} out of range")
        if self.terminal_rule not in ("random", "first"):
            raise SpecInvalid(f"unknown terminal rule {self.terminal_rule!r}")
        if self.parity_rule not in ("unconstrained", "even-interior"):
            raise SpecInvalid(f"unknown parity rule {self.parity_rule!r}")


def gen_instance(spec: InstanceSpec) -> tuple[MultiGraph, Terminals]:
    """Seed-deterministic random multigraph plus terminal quadruple.

    Under the even-interior rule, odd-degree interior vertices are paired
    off with extra edges (to each other, one to a terminal if the count is
    odd) so every interior degree comes out even; draws are retried until
    the patched graph still fits the edge bound.
    """
    spec.validate()
    rng = random.Random(spec.seed)
    for _ in range(10_000):
        n = rng.randint(spec.min_vertices, spec.max_vertices)
        m = rng.randint(spec.min_edges, spec.max_edges)
        g = MultiGraph(n)
        if spec.terminal_rule == "first":
            quad = (0, 1, 2, 3)
        else:
            quad = tuple(rng.sample(range(n), 4))
        for _ in range(m):
            u = rng.randrange(n)
            w = rng.randrange(n)
            while w == u:
                w = rng.randrange(n)
            g.add_edge(u, w)
        if spec.parity_rule == "even-interior":
            odd = [v for v in g.vertices if v not in quad and g.degree(v) % 2]
            rng.shuffle(odd)
            while len(odd) >= 2:
                g.add_edge(odd.pop(), odd.pop())
            if odd:
                g.add_edge(odd.pop(), quad[rng.randrange(4)])
        if g.num_edges <= spec.max_edges:
            return g, Terminals(quad)  # type: ignore[arg-type]
    raise SpecInvalid("bounds leave no room for parity patching")


def random_augment_plan(g: MultiGraph, t: Terminals, rng: random.Random) -> AugmentPlan:
    """One random valid plan: each odd interior vertex paired exactly once,
    either with another odd interior vertex or with a random terminal."""
    odd = sorted(v for v in g.vertices if v not in t and g.degree(v) % 2)
    rng.shuffle(odd)
    pairs: list[tuple[int, int]] = []
    while odd:
        if len(odd) >= 2 and rng.random() < 0.5:
            pairs.append((odd.pop(), odd.pop()))
        else:
            pairs.append((odd.pop(), t.vertices[rng.randrange(4)]))
    return AugmentPlan(tuple(pairs))
