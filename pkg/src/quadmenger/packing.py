"""Families of pairwise edge-disjoint chains sharing the four-terminal boundary.

Two constructive packers handle the shapes where a direct recipe exists:
graphs living on the four terminals alone, and star-shaped graphs whose
interior vertices all have even degree. The general maximum packer is an
exact backtracking search over cycle-free candidate chains, upper-bounded
and pruned by the cut resilience of the instance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chains import EdgeChain, VertexChain, boundary
from .cuts import feasible, resilience_value
from .multigraph import GraphError, MultiGraph, Terminals, UnionFind
from .realize import PathSeq, pair_terminals

PAIR_KEYS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class DegreeTooSmall(GraphError):
    """A terminal has fewer edges than the requested packing size."""


class BalanceViolated(GraphError):
    """An interior vertex leans on one terminal for more than half its edges."""


class OddInteriorDegree(GraphError):
    """An interior vertex has odd degree where even degree is required."""


class PlanInvalid(GraphError):
    """An augmentation plan misses or double-covers an odd interior vertex."""


class InsufficientPacking(GraphError):
    """The graph does not admit as many disjoint chains as requested."""


@dataclass(frozen=True)
class Packing:
    """Pairwise edge-disjoint chains that all map to the same boundary."""

    chains: tuple[EdgeChain, ...]
    target: VertexChain

    @property
    def size(self) -> int:
        return len(self.chains)

    def validate(self, g: MultiGraph) -> None:
        """Verify disjointness and per-chain boundaries against a graph."""
        seen: set[int] = set()
        for ch in self.chains:
            if seen & ch.support:
                raise ValueError("chains share an edge")
            seen |= ch.support
            if boundary(g, ch) != self.target:
                raise ValueError("chain boundary differs from the target")


@dataclass(frozen=True)
class QuadProfile:
    """Parallel-edge census of a graph on the four terminals only.

    Keyed by position pairs into the terminal quadruple; edge groups are
    ascending by id. The counts over pairs containing position i sum to the
    degree of terminal i.
    """

    alpha: dict[tuple[int, int], int]
    edges: dict[tuple[int, int], tuple[int, ...]]

    @classmethod
    def from_graph(cls, g: MultiGraph, t: Terminals) -> QuadProfile:
        pos = {v: i for i, v in enumerate(t)}
        groups: dict[tuple[int, int], list[int]] = {key: [] for key in PAIR_KEYS}
        for eid in g.edge_ids():
            u, w = g.endpoints(eid)
            if u not in pos or w not in pos:
                raise ValueError(f"edge {eid} touches a non-terminal vertex")
            i, j = sorted((pos[u], pos[w]))
            groups[(i, j)].append(eid)
        return cls(
            {key: len(grp) for key, grp in groups.items()},
            {key: tuple(grp) for key, grp in groups.items()},
        )


@dataclass(frozen=True)
class OddVertexProfile:
    """Terminal-edge census of one interior vertex, sorted descending.

    `order` lists the terminal positions that induce the sorted counts;
    count ties break towards the lower position.
    """

    vertex: int
    counts: tuple[int, int, int, int]
    order: tuple[int, int, int, int]

    @property
    def balanced(self) -> bool:
        """Largest class no bigger than the other three together."""
        return self.counts[0] <= self.counts[1] + self.counts[2] + self.counts[3]

    @classmethod
    def from_graph(cls, g: MultiGraph, t: Terminals, y: int) -> OddVertexProfile:
        raw = [0, 0, 0, 0]
        pos = {v: i for i, v in enumerate(t)}
        for eid in g.incident(y):
            other = g.other_end(eid, y)
            if other in pos:
                raw[pos[other]] += 1
        ranked = sorted(range(4), key=lambda i: (-raw[i], i))
        return cls(y, tuple(raw[i] for i in ranked), tuple(ranked))  # type: ignore[arg-type]


@dataclass(frozen=True)
class AugmentPlan:
    """New edges to draw, one per odd-degree interior vertex."""

    new_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SplitPath:
    """One realized path, labelled with the split it belongs to."""

    split: int
    head: int
    tail: int
    path: PathSeq


def pack_complete_quad(g: MultiGraph, t: Terminals, k: int) -> Packing:
    """Disjoint chains on a graph whose vertices are exactly the terminals.

    Opposite parallel classes are matched pairwise into two-edge chains;
    when that falls short of k, the rest is filled with three-edge chains
    all anchored at one terminal. Needs degree >= k at every terminal and
    then always returns at least k chains.
    """
    t.require_in(g)
    if set(g.vertices) != set(t.vertices):
        raise ValueError("graph must contain the four terminals and nothing else")
    for i, v in enumerate(t):
        if g.degree(v) < k:
            raise DegreeTooSmall(f"terminal {i + 1} (vertex {v}) has degree {g.degree(v)} < {k}")
    target = VertexChain(t.as_set())
    if k == 0:
        return Packing((), target)
    prof = QuadProfile.from_graph(g, t)

    def count(perm: tuple[int, ...], i: int, j: int) -> int:
        a, b = sorted((perm[i], perm[j]))
        return prof.alpha[(a, b)]

    def group(perm: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
        a, b = sorted((perm[i], perm[j]))
        return prof.edges[(a, b)]

    # Re-index positions so the two pairs at slot (0,1) and (0,2) dominate
    # their opposites; such a permutation always exists.
    perm = next(
        p
        for p in itertools.permutations(range(4))
        if count(p, 2, 3) <= count(p, 0, 1) and count(p, 1, 3) <= count(p, 0, 2)
    )
    m1 = count(perm, 2, 3)
    m2 = count(perm, 1, 3)
    m3 = min(count(perm, 0, 3), count(perm, 1, 2))
    chains: list[EdgeChain] = []
    for z in range(m1):
        chains.append(EdgeChain.of(group(perm, 0, 1)[z], group(perm, 2, 3)[z]))
    for z in range(m2):
        chains.append(EdgeChain.of(group(perm, 0, 2)[z], group(perm, 1, 3)[z]))
    for z in range(m3):
        chains.append(EdgeChain.of(group(perm, 0, 3)[z], group(perm, 1, 2)[z]))
    if len(chains) < k:
        # Degree >= k forces a strict surplus on the three pairs at
        # position 0, enough to cover the shortfall with triples.
        spare = min(
            count(perm, 0, 3) - count(perm, 1, 2),
            count(perm, 0, 1) - count(perm, 2, 3),
            count(perm, 0, 2) - count(perm, 1, 3),
        )
        for z in range(spare):
            chains.append(
                EdgeChain.of(
                    group(perm, 0, 3)[m3 + z],
                    group(perm, 0, 2)[m2 + z],
                    group(perm, 0, 1)[m1 + z],
                )
            )
    if len(chains) < k:
        raise AssertionError("construction fell short despite the degree precondition")
    return Packing(tuple(chains), target)


def pack_star(g: MultiGraph, t: Terminals, k: int) -> Packing:
    """Disjoint chains when every edge touches a terminal and interior
    degrees are even.

    Interior vertices are eliminated one at a time: their edges are paired
    into two-edge detours, each detour re-drawn as a direct synthetic
    terminal-terminal edge with the pair recorded as its pre-image. The
    residual four-vertex graph is packed directly and synthetic edges are
    substituted back, so the returned chains use original edge ids only.
    """
    t.require_in(g)
    tset = set(t.vertices)
    pos_of = {v: i for i, v in enumerate(t)}
    for eid in g.edge_ids():
        u, w = g.endpoints(eid)
        if u not in tset and w not in tset:
            raise ValueError(f"edge {eid} touches no terminal")
    interior = [v for v in g.vertices if v not in tset]
    for y in interior:
        if g.degree(y) % 2:
            raise OddInteriorDegree(f"interior vertex {y} has odd degree {g.degree(y)}")
    for y in interior:
        prof = OddVertexProfile.from_graph(g, t, y)
        if not prof.balanced:
            raise BalanceViolated(
                f"interior vertex {y} has {prof.counts[0]} edges to one terminal, "
                f"only {sum(prof.counts[1:])} to the rest"
            )
    for i, v in enumerate(t):
        if g.degree(v) < k:
            raise DegreeTooSmall(f"terminal {i + 1} (vertex {v}) has degree {g.degree(v)} < {k}")
    target = VertexChain(t.as_set())
    if k == 0:
        return Packing((), target)

    ends: dict[int, tuple[int, int]] = {e: g.endpoints(e) for e in g.edge_ids()}
    pre: dict[int, tuple[int, ...]] = {e: (e,) for e in ends}
    next_id = max(ends) + 1 if ends else 0

    def redraw(pos_a: int, pos_b: int, wid_a: int, wid_b: int) -> None:
        """Replace two interior edges with one synthetic terminal edge."""
        nonlocal next_id
        sid = next_id
        next_id += 1
        ends[sid] = (t.vertices[pos_a], t.vertices[pos_b])
        pre[sid] = pre[wid_a] + pre[wid_b]
        del ends[wid_a], ends[wid_b]

    for y in interior:
        while True:
            groups: dict[int, list[int]] = {}
            for wid in sorted(ends):
                u, w = ends[wid]
                if y == u or y == w:
                    groups.setdefault(pos_of[w if y == u else u], []).append(wid)
            roles = sorted(groups, key=lambda p: (-len(groups[p]), p))
            n = [len(groups[p]) for p in roles]
            if not roles:
                break
            if len(roles) == 1:
                raise AssertionError("one-sided interior vertex slipped past validation")
            if len(roles) == 2:
                if n[0] != n[1]:
                    raise AssertionError("two-sided interior vertex with unequal classes")
                pa, pb = sorted(roles)
                for z in range(n[0]):
                    redraw(pa, pb, groups[pa][z], groups[pb][z])
                break
            if len(roles) == 3:
                r1, r2, r3 = roles
                if n[0] < n[1] + n[2]:
                    step = (n[1] + n[2] - n[0]) // 2
                    for z in range(step):
                        redraw(r2, r3, groups[r2][n[1] - step + z], groups[r3][n[2] - step + z])
                    continue
                g1, g2, g3 = groups[r1], groups[r2], groups[r3]
                for z in range(n[1]):
                    redraw(r1, r2, g1[n[2] + z], g2[z])
                for z in range(n[2]):
                    redraw(r1, r3, g1[z], g3[z])
                break
            r1, r2, r3, r4 = roles
            if n[0] < n[1] + n[2] + n[3]:
                step = min((n[1] + n[2] + n[3] - n[0]) // 2, n[3])
                for z in range(step):
                    redraw(r3, r4, groups[r3][n[2] - step + z], groups[r4][n[3] - step + z])
                continue
            g1, g2, g3, g4 = groups[r1], groups[r2], groups[r3], groups[r4]
            for z in range(n[1]):
                redraw(r1, r2, g1[n[3] + n[2] + z], g2[z])
            for z in range(n[2]):
                redraw(r1, r3, g1[n[3] + z], g3[z])
            for z in range(n[3]):
                redraw(r1, r4, g1[z], g4[z])
            break

    quad = MultiGraph(4)
    wid_of: list[int] = []
    for wid in sorted(ends):
        u, w = ends[wid]
        quad.add_edge(pos_of[u], pos_of[w])
        wid_of.append(wid)
    qpack = pack_complete_quad(quad, Terminals.of(0, 1, 2, 3), k)
    chains: list[EdgeChain] = []
    for qchain in qpack.chains[:k]:
        originals: set[int] = set()
        for qe in qchain:
            originals.update(pre[wid_of[qe]])
        chains.append(EdgeChain(frozenset(originals)))
    return Packing(tuple(chains), target)


def augment_odd(g: MultiGraph, t: Terminals, plan: AugmentPlan) -> MultiGraph:
    """Draw the plan's new edges so every interior degree becomes even.

    The plan must name each odd-degree interior vertex in exactly one pair;
    pair mates are either another odd interior vertex or a terminal.
    """
    t.require_in(g)
    odd = {v for v in g.vertices if v not in t and g.degree(v) % 2}
    allowed = odd | set(t.vertices)
    coverage = {v: 0 for v in odd}
    for a, b in plan.new_edges:
        if a == b:
            raise PlanInvalid(f"plan edge {a}-{b} is a loop")
        if a not in allowed or b not in allowed:
            raise PlanInvalid(f"plan edge {a}-{b} uses a vertex outside terminals and odd interiors")
        if a not in odd and b not in odd:
            raise PlanInvalid(f"plan edge {a}-{b} touches no odd interior vertex")
        for x in (a, b):
            if x in odd:
                coverage[x] += 1
    for v, hits in coverage.items():
        if hits != 1:
            raise PlanInvalid(f"odd interior vertex {v} covered {hits} times, need exactly 1")
    out = g.copy()
    for a, b in plan.new_edges:
        out.add_edge(a, b)
    return out


def _forest_structure(
    g: MultiGraph,
) -> tuple[dict[int, tuple[int, int]], dict[int, int], list[int]]:
    """Spanning forest taking edges in ascending id order.

    Returns (parent, depth, non_tree_edges) where parent maps a vertex to
    (parent vertex, connecting edge id); roots are absent from parent.
    """
    uf = UnionFind(g.vertices)
    tree_adj: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    non_tree: list[int] = []
    for eid in g.edge_ids():
        u, w = g.endpoints(eid)
        if uf.union(u, w):
            tree_adj[u].append((w, eid))
            tree_adj[w].append((u, eid))
        else:
            non_tree.append(eid)
    parent: dict[int, tuple[int, int]] = {}
    depth: dict[int, int] = {}
    for root in g.vertices:
        if root in depth:
            continue
        depth[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y, eid in tree_adj[x]:
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = (x, eid)
                    stack.append(y)
    return parent, depth, non_tree


def _tree_path(
    parent: dict[int, tuple[int, int]], depth: dict[int, int], u: int, w: int
) -> set[int]:
    edges: set[int] = set()
    a, b = u, w
    while depth[a] > depth[b]:
        a, eid = parent[a][0], parent[a][1]
        edges.add(eid)
    while depth[b] > depth[a]:
        b, eid = parent[b][0], parent[b][1]
        edges.add(eid)
    while a != b:
        a, ea = parent[a][0], parent[a][1]
        b, eb = parent[b][0], parent[b][1]
        edges.add(ea)
        edges.add(eb)
    return edges


def _candidate_chains(g: MultiGraph, targets: frozenset[int]) -> list[tuple[int, tuple[int, ...]]]:
    """All cycle-free chains whose boundary is the target set.

    Enumerated as one base chain (forest paths pairing the targets inside
    each component) shifted by every combination of the fundamental cycles,
    then filtered to forest supports. Any packing can be normalized to use
    only such chains, because stripping a boundaryless sub-chain changes
    neither the boundary nor disjointness.
    """
    eids = g.edge_ids()
    bit_of = {e: 1 << i for i, e in enumerate(eids)}
    parent, depth, non_tree = _forest_structure(g)

    base = 0
    for comp in g.connected_components():
        inside = sorted(comp & targets)
        for i in range(0, len(inside), 2):
            for eid in _tree_path(parent, depth, inside[i], inside[i + 1]):
                base ^= bit_of[eid]

    cycle_masks: list[int] = []
    for eid in non_tree:
        u, w = g.endpoints(eid)
        mask = bit_of[eid]
        for tid in _tree_path(parent, depth, u, w):
            mask ^= bit_of[tid]
        cycle_masks.append(mask)

    coset = [0] * (1 << len(cycle_masks))
    coset[0] = base
    for s in range(1, len(coset)):
        low = s & -s
        coset[s] = coset[s ^ low] ^ cycle_masks[low.bit_length() - 1]

    out: list[tuple[int, tuple[int, ...]]] = []
    for mask in coset:
        support = tuple(e for e in eids if bit_of[e] & mask)
        uf = UnionFind()
        ok = True
        for e in support:
            u, w = g.endpoints(e)
            uf.add(u)
            uf.add(w)
            if not uf.union(u, w):
                ok = False
                break
        if ok:
            out.append((mask, support))
    out.sort(key=lambda item: (len(item[1]), item[1]))
    return out


def max_packing(g: MultiGraph, t: Terminals) -> tuple[int, Packing]:
    """Exact maximum number of disjoint chains with the terminal boundary,
    plus one witnessing family.

    Branch-and-bound over the cycle-free candidate chains in a fixed
    deterministic order; the instance's resilience is a hard ceiling and
    stops the search as soon as it is reached. Exponential in the cycle
    rank, intended for desk-scale graphs.
    """
    t.require_in(g)
    target = VertexChain(t.as_set())
    if not feasible(g, t.as_set()):
        return 0, Packing((), target)
    ceiling = resilience_value(g, t)
    cands = _candidate_chains(g, t.as_set())

    best: list[int] = []
    acc: list[int] = []

    def grow(start: int, used: int) -> None:
        nonlocal best
        if len(acc) > len(best):
            best = acc.copy()
        if len(best) >= ceiling:
            return
        for j in range(start, len(cands)):
            if len(acc) + (len(cands) - j) <= len(best):
                break
            mask, _ = cands[j]
            if mask & used:
                continue
            acc.append(j)
            grow(j + 1, used | mask)
            acc.pop()
            if len(best) >= ceiling:
                return
    grow(0, 0)
    chains = tuple(EdgeChain(frozenset(cands[j][1])) for j in best)
    return len(chains), Packing(chains, target)


def find_parity_deletion(g: MultiGraph, t: Terminals, k: int) -> tuple[bool, frozenset[int]]:
    """Search for a deletion that evens out all interior degrees while the
    remaining graph still withstands k-1 further deletions.

    Depth-first over edge subsets in ascending id order, pruned by the fact
    that deleting more edges can only lower resilience. Desk-scale search.
    Returns (found, witnessing deletion).
    """
    t.require_in(g)
    if k <= 0:
        return True, frozenset()
    eids = g.edge_ids()
    index_of = {e: i for i, e in enumerate(eids)}
    interior = [v for v in g.vertices if v not in t]
    base_parity = {v: g.degree(v) & 1 for v in interior}
    incident = {v: [index_of[e] for e in g.incident(v)] for v in interior}

    resil_cache: dict[frozenset[int], int] = {}

    def resil(deleted: frozenset[int]) -> int:
        if deleted not in resil_cache:
            resil_cache[deleted] = resilience_value(g.delete_edges(deleted), t)
        return resil_cache[deleted]

    def search(deleted: frozenset[int], start: int) -> frozenset[int] | None:
        if resil(deleted) < k:
            return None
        odd = [
            v
            for v in interior
            if (base_parity[v] + sum(1 for i in incident[v] if eids[i] in deleted)) & 1
        ]
        if not odd:
            return deleted
        for v in odd:
            if not any(i >= start for i in incident[v]):
                return None
        for j in range(start, len(eids)):
            found = search(deleted | {eids[j]}, j + 1)
            if found is not None:
                return found
        return None

    found = search(frozenset(), 0)
    if found is None:
        return False, frozenset()
    return True, found


def paths_packing(g: MultiGraph, t: Terminals, k: int) -> list[SplitPath]:
    """Realize k disjoint chains as 2k edge-disjoint paths.

    Each chain splits the four terminals into two pairs joined by two
    disjoint paths; across chains no edge repeats either. Raises
    InsufficientPacking when fewer than k disjoint chains exist.
    """
    found, pk = max_packing(g, t)
    if found < k:
        raise InsufficientPacking(f"maximum packing is {found}")
    out: list[SplitPath] = []
    for i in range(k):
        pairing = pair_terminals(g, pk.chains[i], t.as_set())
        for u, w, path in pairing.pairs:
            out.append(SplitPath(i, u, w, path))
    return out
