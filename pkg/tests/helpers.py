"""Shared generators and tiny independent oracles for the test suite."""

from __future__ import annotations

import random

import hypothesis.strategies as st

from quadmenger.multigraph import MultiGraph, Terminals, UnionFind


@st.composite
def graphs(draw, min_vertices=2, max_vertices=8, max_edges=12):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda p: p[0] != p[1]
            ),
            max_size=max_edges,
        )
    )
    g = MultiGraph(n)
    for u, w in pairs:
        g.add_edge(u, w)
    return g


def random_multigraph(
    rng: random.Random, min_v=3, max_v=9, min_e=0, max_e=14
) -> MultiGraph:
    n = rng.randint(min_v, max_v)
    g = MultiGraph(n)
    for _ in range(rng.randint(min_e, max_e)):
        u = rng.randrange(n)
        w = rng.randrange(n)
        while w == u:
            w = rng.randrange(n)
        g.add_edge(u, w)
    return g


def spanning_forest(g: MultiGraph):
    """Parent/depth maps plus the non-tree edge list, edges taken ascending."""
    uf = UnionFind(g.vertices)
    tree = {v: [] for v in g.vertices}
    non_tree = []
    for e in g.edge_ids():
        u, w = g.endpoints(e)
        if uf.union(u, w):
            tree[u].append((w, e))
            tree[w].append((u, e))
        else:
            non_tree.append(e)
    parent: dict[int, tuple[int, int]] = {}
    depth: dict[int, int] = {}
    for root in g.vertices:
        if root in depth:
            continue
        depth[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y, e in tree[x]:
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = (x, e)
                    stack.append(y)
    return parent, depth, non_tree


def tree_path_edges(parent, depth, u: int, w: int) -> set[int]:
    edges: set[int] = set()
    a, b = u, w
    while depth[a] > depth[b]:
        a, e = parent[a]
        edges.add(e)
    while depth[b] > depth[a]:
        b, e = parent[b]
        edges.add(e)
    while a != b:
        a, ea = parent[a]
        b, eb = parent[b]
        edges.add(ea)
        edges.add(eb)
    return edges


def random_cycle_chain(g: MultiGraph, rng: random.Random) -> frozenset[int]:
    """Random element of the cycle space, as an edge id set (may be empty)."""
    parent, depth, non_tree = spanning_forest(g)
    acc: set[int] = set()
    for e in non_tree:
        if rng.random() < 0.6:
            u, w = g.endpoints(e)
            acc ^= {e} | tree_path_edges(parent, depth, u, w)
    return frozenset(acc)


def gf2_in_span(vectors: list[int], target: int) -> bool:
    """Is target an XOR combination of the given bitmask vectors?"""
    basis: list[int] = []
    for vec in vectors:
        for b in basis:
            vec = min(vec, vec ^ b)
        if vec:
            basis.append(vec)
            basis.sort(reverse=True)
    for b in basis:
        target = min(target, target ^ b)
    return target == 0


def random_quad_graph(rng: random.Random, max_parallel=2) -> MultiGraph:
    """Graph on exactly the four terminal vertices 0..3."""
    g = MultiGraph(4)
    for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        for _ in range(rng.randint(0, max_parallel)):
            g.add_edge(i, j)
    return g


def random_star_instance(rng: random.Random, max_interior=4):
    """Star-shaped graph meeting the even-degree and balance preconditions."""
    n_int = rng.randint(0, max_interior)
    g = MultiGraph(4 + n_int)
    t = Terminals.of(0, 1, 2, 3)
    for y in range(4, 4 + n_int):
        while True:
            counts = [rng.randint(0, 3) for _ in range(4)]
            total = sum(counts)
            if total > 0 and total % 2 == 0 and max(counts) <= total - max(counts):
                break
        for i, c in enumerate(counts):
            for _ in range(c):
                g.add_edge(y, i)
    for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        for _ in range(rng.randint(0, 1)):
            g.add_edge(i, j)
    return g, t
