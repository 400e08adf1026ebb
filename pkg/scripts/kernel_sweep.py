#!/usr/bin/env python3
"""Kernel outcomes and sizes for a range of budgets on random instances."""

import argparse
from collections import Counter

from msrecon.generators import gen_random_instance, gen_random_layered
from msrecon.kernel_ell import edge_bound, kernelize, vertex_bound


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=100)
    ap.add_argument("--max-budget", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    corpus = [gen_random_instance(args.seed + i, 8 + i % 7) for i in range(args.instances // 2)]
    corpus += [gen_random_layered(args.seed + i, 2 + i % 3, 8 + i % 6, 0.1) for i in range(args.instances // 2)]
    print(f"{'ell':>3} {'yes':>4} {'no':>4} {'kernel':>6} {'max n':>6} {'n bound':>7} {'max m':>6} {'m bound':>7}")
    for ell in range(args.max_budget + 1):
        counts: Counter = Counter()
        max_n = max_m = 0
        for inst in corpus:
            out = kernelize(inst, ell)
            counts[out.status] += 1
            if out.status == "kernel":
                max_n = max(max_n, out.instance.n)
                max_m = max(max_m, out.instance.graph.m)
        print(
            f"{ell:>3} {counts['yes']:>4} {counts['no']:>4} {counts['kernel']:>6} "
            f"{max_n:>6} {vertex_bound(ell):>7} {max_m:>6} {edge_bound(ell):>7}"
        )


if __name__ == "__main__":
    main()
