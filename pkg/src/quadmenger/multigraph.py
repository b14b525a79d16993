"""Undirected multigraphs with stable integer edge identities.

Vertices and edges are dense non-negative integers handed out in creation
order. Edge ids are never reused: deleting edges produces a new graph whose
surviving edges keep their ids, so edge sets computed against one graph stay
meaningful in every graph derived from it. Parallel edges are first-class
(distinct ids may join the same endpoint pair); loops are rejected outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(Exception):
    """Base class for every error raised by this package."""


class LoopRejected(GraphError):
    """An edge may not join a vertex to itself."""


class UnknownVertex(GraphError):
    """Vertex id not registered in the graph."""


class UnknownEdge(GraphError):
    """Edge id not present in the graph."""


class ParseError(GraphError):
    """Malformed graph text."""


class UnionFind:
    """Disjoint-set forest, path-compressed, smallest member kept as root."""

    def __init__(self, items: Iterable[int] = ()) -> None:
        self.parent: dict[int, int] = {x: x for x in items}

    def add(self, x: int) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Join the classes of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


class MultiGraph:
    """Finite undirected multigraph.

    ``add_vertex`` and ``add_edge`` belong to a construction phase; after
    that the graph is treated as an immutable value. All queries are pure
    and ``delete_edges`` returns a fresh graph, so a built graph can be
    shared freely across threads. No internal locking.
    """

    __slots__ = ("_num_vertices", "_endpoints", "_incidence", "_next_edge")

    def __init__(self, vertices: int = 0) -> None:
        self._num_vertices = 0
        self._endpoints: dict[int, tuple[int, int]] = {}
        self._incidence: dict[int, list[int]] = {}
        self._next_edge = 0
        for _ in range(vertices):
            self.add_vertex()

    # -- construction ---------------------------------------------------

    def add_vertex(self) -> int:
        vid = self._num_vertices
        self._num_vertices += 1
        self._incidence[vid] = []
        return vid

    def add_edge(self, u: int, w: int) -> int:
        """Insert an edge between two distinct registered vertices.

        Returns a fresh edge id; parallel edges get distinct ids.
        """
        self._check_vertex(u)
        self._check_vertex(w)
        if u == w:
            raise LoopRejected(f"edge {u}-{w} would be a loop")
        eid = self._next_edge
        self._next_edge += 1
        self._endpoints[eid] = (u, w)
        self._incidence[u].append(eid)
        self._incidence[w].append(eid)
        return eid

    def copy(self) -> MultiGraph:
        dup = MultiGraph()
        dup._num_vertices = self._num_vertices
        dup._endpoints = dict(self._endpoints)
        dup._incidence = {v: list(es) for v, es in self._incidence.items()}
        dup._next_edge = self._next_edge
        return dup

    def delete_edges(self, drop: Iterable[int]) -> MultiGraph:
        """New graph without the given edges; vertices and surviving ids kept."""
        gone = set(drop)
        for eid in gone:
            if eid not in self._endpoints:
                raise UnknownEdge(f"edge {eid} does not exist")
        out = MultiGraph()
        out._num_vertices = self._num_vertices
        out._endpoints = {e: uw for e, uw in self._endpoints.items() if e not in gone}
        out._incidence = {v: [] for v in range(self._num_vertices)}
        for e, (u, w) in out._endpoints.items():
            out._incidence[u].append(e)
            out._incidence[w].append(e)
        out._next_edge = self._next_edge
        return out

    # -- queries ---------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return self._num_vertices

    @property
    def num_edges(self) -> int:
        return len(self._endpoints)

    @property
    def vertices(self) -> range:
        return range(self._num_vertices)

    def edge_ids(self) -> list[int]:
        """All edge ids, ascending."""
        return sorted(self._endpoints)

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._endpoints[eid]
        except KeyError:
            raise UnknownEdge(f"edge {eid} does not exist") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._endpoints

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.endpoints(eid)
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownVertex(f"vertex {v} is not an endpoint of edge {eid}")

    def incident(self, v: int) -> list[int]:
        """Edge ids touching v, ascending."""
        self._check_vertex(v)
        return sorted(self._incidence[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._incidence[v])

    def connected_components(self) -> list[frozenset[int]]:
        """Partition of the vertex set; isolated vertices give singletons.

        Blocks come out ordered by their smallest member.
        """
        uf = UnionFind(self.vertices)
        for u, w in self._endpoints.values():
            uf.union(u, w)
        blocks: dict[int, set[int]] = {}
        for v in self.vertices:
            blocks.setdefault(uf.find(v), set()).add(v)
        return [frozenset(blocks[r]) for r in sorted(blocks)]

    # -- plumbing ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._num_vertices):
            raise UnknownVertex(f"vertex {v} is not registered")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        if self._num_vertices != other._num_vertices:
            return False
        if self._endpoints.keys() != other._endpoints.keys():
            return False
        return all(
            frozenset(self._endpoints[e]) == frozenset(other._endpoints[e])
            for e in self._endpoints
        )

    def __repr__(self) -> str:
        return f"MultiGraph(vertices={self._num_vertices}, edges={dict(self._endpoints)!r})"


@dataclass(frozen=True)
class Terminals:
    """Ordered quadruple of distinct terminal vertices."""

    vertices: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.vertices) != 4 or len(set(self.vertices)) != 4:
            raise ValueError(f"need four distinct vertices, got {self.vertices!r}")

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> Terminals:
        return cls((a, b, c, d))

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def as_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def require_in(self, g: MultiGraph) -> None:
        for v in self.vertices:
            if not (0 <= v < g.num_vertices):
                raise UnknownVertex(f"terminal {v} is not registered in the graph")


# -- text format --------------------------------------------------------
#
# One declaration per line, `#` starts a comment:
#   v <count>            vertices are 0..count-1 (must come first, once)
#   e <u> <w>            one edge; line order defines edge ids 0,1,2,...
#   t <a> <b> <c> <d>    optional terminal quadruple


def parse_graph(text: str) -> tuple[MultiGraph, Terminals | None]:
    """Parse the text format. Line order of `e` records fixes edge ids."""
    graph: MultiGraph | None = None
    terminals: Terminals | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "v":
            if graph is not None:
                raise ParseError(f"line {lineno}: duplicate v record")
            count = _parse_int(fields, 1, lineno, expected=2)
            if count < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            graph = MultiGraph(count)
        elif kind == "e":
            if graph is None:
                raise ParseError(f"line {lineno}: e record before v record")
            if len(fields) != 3:
                raise ParseError(f"line {lineno}: e record needs two endpoints")
            u = _parse_int(fields, 1, lineno)
            w = _parse_int(fields, 2, lineno)
            _check_index(u, graph, lineno)
            _check_index(w, graph, lineno)
            if u == w:
                raise ParseError(f"line {lineno}: loop edge {u}-{w} not allowed")
            graph.add_edge(u, w)
        elif kind == "t":
            if graph is None:
                raise ParseError(f"line {lineno}: t record before v record")
            if terminals is not None:
                raise ParseError(f"line {lineno}: duplicate t record")
            if len(fields) != 5:
                raise ParseError(f"line {lineno}: t record needs four vertices")
            quad = tuple(_parse_int(fields, i, lineno) for i in range(1, 5))
            for v in quad:
                _check_index(v, graph, lineno)
            if len(set(quad)) != 4:
                raise ParseError(f"line {lineno}: terminals must be distinct")
            terminals = Terminals(quad)  # type: ignore[arg-type]
        else:
            raise ParseError(f"line {lineno}: unknown record {kind!r}")
    if graph is None:
        raise ParseError("missing v record")
    return graph, terminals


def format_graph(g: MultiGraph, t: Terminals | None = None) -> str:
    """Render the text format; edges come out in ascending id order.

    Ids are re-densified on parse, so the round trip is exact only for
    graphs that never lost an edge.
    """
    lines = [f"v {g.num_vertices}"]
    for eid in g.edge_ids():
        u, w = g.endpoints(eid)
        lines.append(f"e {u} {w}")
    if t is not None:
        lines.append("t " + " ".join(str(v) for v in t))
    return "\n".join(lines) + "\n"


def _parse_int(fields: list[str], idx: int, lineno: int, expected: int | None = None) -> int:
    if expected is not None and len(fields) != expected:
        raise ParseError(f"line {lineno}: expected {expected - 1} value(s)")
    try:
        return int(fields[idx])
    except (ValueError, IndexError):
        raise ParseError(f"line {lineno}: bad integer field") from None


def _check_index(v: int, g: MultiGraph, lineno: int) -> None:
    if not (0 <= v < g.num_vertices):
        raise ParseError(f"line {lineno}: vertex index {v} out of range")
