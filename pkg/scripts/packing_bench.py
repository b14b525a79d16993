#!/usr/bin/env python3
"""Time the exact packer and the brute-force referee on growing instances.

Useful for picking desk-scale bounds: both are exponential, but in very
different quantities (cycle rank versus raw edge count).
"""

import argparse
import time

from quadmenger.oracle import InstanceSpec, brute_max_packing, gen_instance
from quadmenger.packing import max_packing


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--per-size", type=int, default=25)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-edges", type=int, default=18)
    args = ap.parse_args()

    print(f"{'edges<=':>8}  {'search ms':>10}  {'brute ms':>10}  {'mismatch':>8}")
    for cap in range(6, args.max_edges + 1, 2):
        search_total = brute_total = 0.0
        mismatches = 0
        for i in range(args.per_size):
            spec = InstanceSpec(
                seed=args.seed + 1000 * cap + i,
                min_edges=max(0, cap - 2),
                max_edges=cap,
            )
            g, t = gen_instance(spec)
            t0 = time.perf_counter()
            k, _ = max_packing(g, t)
            search_total += time.perf_counter() - t0
            t0 = time.perf_counter()
            b = brute_max_packing(g, t)
            brute_total += time.perf_counter() - t0
            mismatches += k != b
        print(
            f"{cap:>8}  {1000 * search_total / args.per_size:>10.2f}  "
            f"{1000 * brute_total / args.per_size:>10.2f}  {mismatches:>8}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
