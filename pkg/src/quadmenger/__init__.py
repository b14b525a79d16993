"""Chain calculus and edge-disjoint packing for four-terminal multigraphs.

Core objects: MultiGraph (parallel edges, stable ids), EdgeChain /
VertexChain (mod-2 sums with the boundary operator), and the analyses on
top: feasibility and cut resilience, constructive and exact maximum
packings, and the realization of chains as concrete edge-disjoint paths.
"""

from .chains import (
    EdgeChain,
    VertexChain,
    boundary,
    chain_add,
    format_edge_chain,
    format_vertex_chain,
    is_cycle,
)
from .cuts import (
    CutCertificate,
    OddTargetCount,
    feasible,
    resilience,
    resilience_value,
    two_terminal_resilience,
)
from .fixtures import counterexample
from .multigraph import (
    GraphError,
    LoopRejected,
    MultiGraph,
    ParseError,
    Terminals,
    UnknownEdge,
    UnknownVertex,
    format_graph,
    parse_graph,
)
from .packing import (
    AugmentPlan,
    BalanceViolated,
    DegreeTooSmall,
    InsufficientPacking,
    OddInteriorDegree,
    OddVertexProfile,
    Packing,
    PlanInvalid,
    QuadProfile,
    SplitPath,
    augment_odd,
    find_parity_deletion,
    max_packing,
    pack_complete_quad,
    pack_star,
    paths_packing,
)
from .realize import (
    BadBoundary,
    NotACycle,
    PathSeq,
    TerminalPairing,
    decompose_cycles,
    extract_path,
    pair_terminals,
)

__all__ = [
    "AugmentPlan",
    "BadBoundary",
    "BalanceViolated",
    "CutCertificate",
    "DegreeTooSmall",
    "EdgeChain",
    "GraphError",
    "InsufficientPacking",
    "LoopRejected",
    "MultiGraph",
    "NotACycle",
    "OddInteriorDegree",
    "OddTargetCount",
    "OddVertexProfile",
    "Packing",
    "ParseError",
    "PathSeq",
    "PlanInvalid",
    "QuadProfile",
    "SplitPath",
    "TerminalPairing",
    "Terminals",
    "UnknownEdge",
    "UnknownVertex",
    "augment_odd",
    "boundary",
    "chain_add",
    "counterexample",
    "decompose_cycles",
    "extract_path",
    "feasible",
    "find_parity_deletion",
    "format_edge_chain",
    "format_graph",
    "format_vertex_chain",
    "is_cycle",
    "max_packing",
    "pack_complete_quad",
    "pack_star",
    "pair_terminals",
    "parse_graph",
    "paths_packing",
    "resilience",
    "resilience_value",
    "two_terminal_resilience",
]
