"""Built-in graphs shared by the test suite and the command line."""

from __future__ import annotations

from .multigraph import MultiGraph, Terminals


def counterexample() -> tuple[MultiGraph, Terminals]:
    """Seven-edge graph whose resilience is 2 but whose best packing is 1.

    Four terminals (0..3) of degree two, plus two interior vertices of odd
    degree (4 and 5). No single edge deletion disconnects the terminal
    boundary, yet any two disjoint chains would have to use all seven
    edges, which leaves the two interior vertices uncancelled. The odd
    interior degrees are exactly what blocks the second chain.
    """
    g = MultiGraph(6)
    for u, w in [(0, 4), (1, 4), (2, 4), (1, 5), (2, 5), (3, 5), (0, 3)]:
        g.add_edge(u, w)
    return g, Terminals.of(0, 1, 2, 3)


FIXTURES = {
    "counterexample": counterexample,
}
