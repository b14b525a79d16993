"""Turn abstract chains into concrete alternating vertex/edge sequences.

A chain with boundary {u, v} always contains a walkable path from u to v;
a chain with empty boundary splits into edge-disjoint closed walks. The
constructions here follow the obvious peeling argument: repeatedly consume
the smallest-id edge incident to the frontier vertex. Leftover edges (which
necessarily form a boundaryless chain) are simply not used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import EdgeChain, boundary
from .multigraph import GraphError, MultiGraph


class BadBoundary(GraphError):
    """Chain boundary does not match the requested endpoints."""


class NotACycle(GraphError):
    """Chain has a nonzero boundary where a cycle was required."""


@dataclass(frozen=True)
class PathSeq:
    """Alternating sequence w0, e1, w1, ..., et, wt.

    Edges are pairwise distinct and each edge joins its two neighbours in
    the sequence; vertices may repeat. A single vertex with no edges is the
    trivial closed walk.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("vertex/edge counts out of step")

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def closed(self) -> bool:
        return self.start == self.end

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def validate(self, g: MultiGraph) -> None:
        """Check incidence and edge distinctness against a graph."""
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("repeated edge in path")
        for i, eid in enumerate(self.edges):
            if frozenset(g.endpoints(eid)) != {self.vertices[i], self.vertices[i + 1]}:
                raise ValueError(f"edge {eid} does not join positions {i},{i + 1}")

    def render(self) -> str:
        """`v0 -e3- v2 -e7- v1` style, single vertex for the trivial walk."""
        parts = [f"v{self.vertices[0]}"]
        for eid, v in zip(self.edges, self.vertices[1:]):
            parts.append(f"-e{eid}-")
            parts.append(f"v{v}")
        return " ".join(parts)


@dataclass(frozen=True)
class TerminalPairing:
    """Edge-disjoint paths pairing up an even set of endpoint vertices."""

    pairs: tuple[tuple[int, int, PathSeq], ...]

    def endpoint_set(self) -> frozenset[int]:
        out: set[int] = set()
        for u, w, _ in self.pairs:
            out |= {u, w}
        return frozenset(out)


def _min_incident(g: MultiGraph, support: set[int], v: int) -> int:
    best = -1
    for eid in support:
        a, b = g.endpoints(eid)
        if (v == a or v == b) and (best < 0 or eid < best):
            best = eid
    if best < 0:
        raise AssertionError(f"no edge at vertex {v}; boundary invariant broken")
    return best


def _walk(g: MultiGraph, support: set[int], u: int, v: int) -> tuple[list[int], list[int]]:
    """Consume a path from u to v out of `support` (mutated in place).

    Walks backwards from v taking the smallest-id incident edge each step;
    the boundary invariant guarantees the frontier vertex always has one.
    Returns (vertices, edges) oriented u -> v.
    """
    verts = [v]
    edges: list[int] = []
    cur = v
    while cur != u:
        eid = _min_incident(g, support, cur)
        cur = g.other_end(eid, cur)
        support.discard(eid)
        edges.append(eid)
        verts.append(cur)
    verts.reverse()
    edges.reverse()
    return verts, edges


def extract_path(g: MultiGraph, p: EdgeChain, u: int, v: int) -> PathSeq:
    """Concrete path from u to v using only edges of p.

    Requires boundary(p) == {u, v}. Not every edge of p needs to appear;
    what is left over after removing the path is always boundaryless.
    """
    if u == v:
        raise BadBoundary("endpoints must differ")
    bnd = boundary(g, p)
    if bnd.support != {u, v}:
        raise BadBoundary(f"chain boundary is {sorted(bnd.support)}, not [{min(u, v)}, {max(u, v)}]")
    verts, edges = _walk(g, set(p.support), u, v)
    return PathSeq(tuple(verts), tuple(edges))


def decompose_cycles(g: MultiGraph, c: EdgeChain) -> list[PathSeq]:
    """Split a boundaryless chain into closed walks that partition it.

    Each walk has at least two edges, no two walks share an edge, and the
    union of their edge sets is exactly the support of c.
    """
    if boundary(g, c):
        raise NotACycle("chain has a nonzero boundary")
    remaining = set(c.support)
    out: list[PathSeq] = []
    while remaining:
        closing = min(remaining)
        a, b = g.endpoints(closing)
        u, v = (a, b) if a < b else (b, a)
        remaining.discard(closing)
        verts, edges = _walk(g, remaining, u, v)
        out.append(PathSeq(tuple(verts) + (u,), tuple(edges) + (closing,)))
    return out


def pair_terminals(g: MultiGraph, p: EdgeChain, endpoints: frozenset[int] | set[int]) -> TerminalPairing:
    """Split a chain with boundary {v1..v2n} into n edge-disjoint paths.

    Which vertices end up paired with which is an output of the
    construction, not a choice of the caller. Every path edge comes from
    the support of p.
    """
    eps = frozenset(endpoints)
    if not eps or len(eps) % 2:
        raise BadBoundary(f"endpoint set must be non-empty and even, got {len(eps)}")
    if boundary(g, p).support != eps:
        raise BadBoundary("chain boundary does not match the endpoint set")
    records = _pair(g, set(p.support), eps)
    pairs = tuple(
        (rec[0], rec[1], PathSeq(tuple(rec[2]), tuple(rec[3]))) for rec in records
    )
    return TerminalPairing(pairs)


def _pair(g: MultiGraph, support: set[int], endpoints: frozenset[int]) -> list[list]:
    # Induction on the number of endpoints, then on the support size.
    if len(endpoints) == 2:
        a, b = sorted(endpoints)
        verts, edges = _walk(g, support, a, b)
        return [[a, b, verts, edges]]
    anchor = max(endpoints)
    eid = _min_incident(g, support, anchor)
    other = g.other_end(eid, anchor)
    support.discard(eid)
    if other in endpoints:
        records = _pair(g, support, endpoints - {anchor, other})
        records.append([other, anchor, [other, anchor], [eid]])
        return records
    records = _pair(g, support, (endpoints - {anchor}) | {other})
    for rec in records:
        if rec[0] == other:
            rec[2].insert(0, anchor)
            rec[3].insert(0, eid)
            rec[0] = anchor
            break
        if rec[1] == other:
            rec[2].append(anchor)
            rec[3].append(eid)
            rec[1] = anchor
            break
    else:
        raise AssertionError("relay vertex lost; pairing invariant broken")
    return records
