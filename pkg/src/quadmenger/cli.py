"""Command-line front end.

Exit codes: 0 success, 2 valid input with a negative answer (packing or
check below the requested size), 1 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .chains import EdgeChain, boundary, format_edge_chain
from .cuts import resilience, two_terminal_resilience
from .fixtures import FIXTURES
from .multigraph import GraphError, MultiGraph, ParseError, Terminals, format_graph, parse_graph
from .oracle import (
    InstanceSpec,
    brute_destroying_deletion,
    brute_disjoint_chain_count,
    brute_max_packing,
    brute_resilience,
    gen_instance,
)
from .packing import (
    AugmentPlan,
    InsufficientPacking,
    augment_odd,
    find_parity_deletion,
    max_packing,
    paths_packing,
)
from .realize import decompose_cycles, extract_path


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for
    # negative answers, so remap usage problems to 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadmenger", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, needs_file: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        if needs_file:
            sp.add_argument("file", help="graph file in the text format")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    add("resilience", "minimum destroying deletion count and certificate")
    sp = add("pack", "maximum disjoint chain family")
    sp.add_argument("-k", type=int, default=None, help="require at least k chains")
    sp = add("paths", "realize k disjoint chains as 2k edge-disjoint paths")
    sp.add_argument("-k", type=int, required=True)
    add("decompose", "split the whole edge set (boundary must vanish) into closed walks")
    add("extract", "walk a path between the two boundary vertices of the whole edge set")
    sp = add("augment", "draw plan edges to even out interior degrees; prints the new graph")
    sp.add_argument("--plan", required=True, help='new edges as "4-5,6-0" vertex pairs')
    sp = add("check6", "is there a deletion with even interior degrees and resilience >= k")
    sp.add_argument("-k", type=int, required=True)
    sp = add("fixture", "write a built-in graph file", needs_file=False)
    sp.add_argument("name", choices=sorted(FIXTURES))
    sp.add_argument("-o", "--output", default=None, help="path, default stdout")
    sp = add("selftest", "cross-check the fast algorithms against brute force", needs_file=False)
    sp.add_argument("--instances", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--even-interior", action="store_true")
    return parser


def _load(path: str, need_terminals: bool = True) -> tuple[MultiGraph, Terminals | None]:
    with open(path, "r", encoding="utf-8") as fh:
        g, t = parse_graph(fh.read())
    if need_terminals and t is None:
        raise ParseError(f"{path}: missing t record required by this command")
    return g, t


def _emit(args: argparse.Namespace, text_lines: list[str], payload: dict[str, Any]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_resilience(args: argparse.Namespace) -> int:
    g, t = _load(args.file)
    k, cert = resilience(g, t)
    _emit(
        args,
        [f"k={k}", f"certificate: {format_edge_chain(EdgeChain(cert.deleted))}"],
        {"k": k, "certificate": sorted(cert.deleted)},
    )
    return 0


def cmd_pack(args: argparse.Namespace) -> int:
    g, t = _load(args.file)
    if args.k is not None and args.k < 0:
        raise ParseError("-k must be nonnegative")
    k, pk = max_packing(g, t)
    if args.k is not None and k < args.k:
        _emit(args, [f"maximum packing is {k}"], {"k": k, "chains": None})
        return 2
    shown = pk.chains[: args.k] if args.k is not None else pk.chains
    _emit(
        args,
        [f"k={k}"] + [f"chain: {format_edge_chain(ch)}" for ch in shown],
        {"k": k, "chains": [sorted(ch.support) for ch in shown]},
    )
    return 0


def cmd_paths(args: argparse.Namespace) -> int:
    g, t = _load(args.file)
    if args.k < 0:
        raise ParseError("-k must be nonnegative")
    try:
        split_paths = paths_packing(g, t, args.k)
    except InsufficientPacking as exc:
        _emit(args, [str(exc)], {"k": args.k, "paths": None, "error": str(exc)})
        return 2
    _emit(
        args,
        [
            f"split {sp.split} pair v{sp.head}-v{sp.tail}: {sp.path.render()}"
            for sp in split_paths
        ],
        {
            "k": args.k,
            "paths": [
                {
                    "split": sp.split,
                    "endpoints": [sp.head, sp.tail],
                    "vertices": list(sp.path.vertices),
                    "edges": list(sp.path.edges),
                }
                for sp in split_paths
            ],
        },
    )
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    g, _ = _load(args.file, need_terminals=False)
    whole = EdgeChain(frozenset(g.edge_ids()))
    cycles = decompose_cycles(g, whole)
    _emit(
        args,
        [f"cycle: {c.render()}" for c in cycles],
        {
            "cycles": [
                {"vertices": list(c.vertices), "edges": list(c.edges)} for c in cycles
            ]
        },
    )
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    g, _ = _load(args.file, need_terminals=False)
    whole = EdgeChain(frozenset(g.edge_ids()))
    ends = sorted(boundary(g, whole).support)
    if len(ends) != 2:
        raise ParseError(
            f"{args.file}: edge set boundary has {len(ends)} vertices, need exactly 2"
        )
    path = extract_path(g, whole, ends[0], ends[1])
    _emit(
        args,
        [f"path: {path.render()}"],
        {
            "endpoints": ends,
            "vertices": list(path.vertices),
            "edges": list(path.edges),
        },
    )
    return 0


def cmd_augment(args: argparse.Namespace) -> int:
    g, t = _load(args.file)
    pairs: list[tuple[int, int]] = []
    for part in args.plan.split(","):
        part = part.strip()
        if not part:
            continue
        bits = part.split("-")
        if len(bits) != 2:
            raise ParseError(f'bad plan segment {part!r}, expected "a-b"')
        try:
            pairs.append((int(bits[0]), int(bits[1])))
        except ValueError:
            raise ParseError(f"bad plan segment {part!r}, endpoints must be integers") from None
    gn = augment_odd(g, t, AugmentPlan(tuple(pairs)))
    _emit(
        args,
        [format_graph(gn, t).rstrip("\n")],
        {
            "vertices": gn.num_vertices,
            "edges": [list(gn.endpoints(e)) for e in gn.edge_ids()],
            "terminals": list(t.vertices),
        },
    )
    return 0


def cmd_check6(args: argparse.Namespace) -> int:
    g, t = _load(args.file)
    if args.k < 0:
        raise ParseError("-k must be nonnegative")
    ok, deletion = find_parity_deletion(g, t, args.k)
    _emit(
        args,
        [
            f"ok={'true' if ok else 'false'}",
            f"deletion: {format_edge_chain(EdgeChain(deletion))}",
        ],
        {"ok": ok, "deletion": sorted(deletion)},
    )
    return 0 if ok else 2


def cmd_fixture(args: argparse.Namespace) -> int:
    g, t = FIXTURES[args.name]()
    text = format_graph(g, t)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_selftest(args: argparse.Namespace) -> int:
    if args.instances <= 0:
        raise ParseError("--instances must be positive")
    parity = "even-interior" if args.even_interior else "unconstrained"
    tallies: dict[str, list[int]] = {}

    def record(name: str, ok: bool) -> None:
        cell = tallies.setdefault(name, [0, 0])
        cell[0 if ok else 1] += 1

    from .cuts import resilience_value

    for i in range(args.instances):
        spec = InstanceSpec(seed=args.seed + i, parity_rule=parity)
        g, t = gen_instance(spec)
        r = resilience_value(g, t)
        record("resilience matches brute force", r == brute_resilience(g, t))
        k, pk = max_packing(g, t)
        record("max packing matches brute force", k == brute_max_packing(g, t))
        try:
            pk.validate(g)
            record("packing verifies", True)
        except ValueError:
            record("packing verifies", False)
        a, b = t.vertices[0], t.vertices[1]
        flow = two_terminal_resilience(g, a, b)
        record(
            "two-terminal flow, deletion and chain family agree",
            flow == brute_destroying_deletion(g, {a, b})
            and flow == brute_disjoint_chain_count(g, {a, b}),
        )
        if args.even_interior:
            record("even interior: packing equals resilience", k == r)

    width = max(len(name) for name in tallies) + 2
    lines = [f"{'property'.ljust(width)}pass  fail"]
    total_pass = total_fail = 0
    for name in sorted(tallies):
        ok, bad = tallies[name]
        total_pass += ok
        total_fail += bad
        lines.append(f"{name.ljust(width)}{ok:4d}  {bad:4d}")
    lines.append(f"summary: {total_pass}/{total_pass + total_fail} checks passed")
    _emit(
        args,
        lines,
        {
            "instances": args.instances,
            "seed": args.seed,
            "properties": {
                name: {"pass": ok, "fail": bad} for name, (ok, bad) in tallies.items()
            },
            "ok": total_fail == 0,
        },
    )
    return 0 if total_fail == 0 else 2


_HANDLERS = {
    "resilience": cmd_resilience,
    "pack": cmd_pack,
    "paths": cmd_paths,
    "decompose": cmd_decompose,
    "extract": cmd_extract,
    "augment": cmd_augment,
    "check6": cmd_check6,
    "fixture": cmd_fixture,
    "selftest": cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
