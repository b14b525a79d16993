"""Mod-2 chain algebra over edges and vertices, plus the boundary operator.

A chain is a formal sum with coefficients in {0, 1}, represented by its
support set; addition is symmetric difference (XOR). Edge chains and vertex
chains are deliberately distinct types so a boundary image can never be fed
back where an edge set is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .multigraph import MultiGraph


@dataclass(frozen=True)
class EdgeChain:
    """Set of edge ids under XOR addition; the empty set is the zero chain."""

    support: frozenset[int] = frozenset()

    @classmethod
    def of(cls, *eids: int) -> EdgeChain:
        return cls(frozenset(eids))

    @classmethod
    def from_edges(cls, eids: Iterable[int]) -> EdgeChain:
        return cls(frozenset(eids))

    def __xor__(self, other: EdgeChain) -> EdgeChain:
        if not isinstance(other, EdgeChain):
            return NotImplemented
        return EdgeChain(self.support ^ other.support)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.support))

    def __len__(self) -> int:
        return len(self.support)

    def __contains__(self, eid: object) -> bool:
        return eid in self.support

    def __bool__(self) -> bool:
        return bool(self.support)


@dataclass(frozen=True)
class VertexChain:
    """Set of vertex ids under XOR addition."""

    support: frozenset[int] = frozenset()

    @classmethod
    def of(cls, *vids: int) -> VertexChain:
        return cls(frozenset(vids))

    def __xor__(self, other: VertexChain) -> VertexChain:
        if not isinstance(other, VertexChain):
            return NotImplemented
        return VertexChain(self.support ^ other.support)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.support))

    def __len__(self) -> int:
        return len(self.support)

    def __contains__(self, vid: object) -> bool:
        return vid in self.support

    def __bool__(self) -> bool:
        return bool(self.support)


def chain_add(a: EdgeChain, b: EdgeChain) -> EdgeChain:
    """XOR of two edge chains (addition in characteristic 2)."""
    return a ^ b


def boundary(g: MultiGraph, chain: EdgeChain) -> VertexChain:
    """Linear boundary: each edge maps to the sum of its two endpoints.

    Vertices covered an even number of times cancel. Raises UnknownEdge
    for ids absent from the graph.
    """
    odd: set[int] = set()
    for eid in chain.support:
        u, w = g.endpoints(eid)
        odd ^= {u, w}
    return VertexChain(frozenset(odd))


def is_cycle(g: MultiGraph, chain: EdgeChain) -> bool:
    """True when the chain's boundary vanishes. The zero chain counts."""
    return not boundary(g, chain)


def format_edge_chain(chain: EdgeChain) -> str:
    """Serialize as `e<i>+e<j>+...` in ascending id order; zero chain is `0`."""
    if not chain:
        return "0"
    return "+".join(f"e{eid}" for eid in chain)


def format_vertex_chain(chain: VertexChain) -> str:
    if not chain:
        return "0"
    return "+".join(f"v{vid}" for vid in chain)
