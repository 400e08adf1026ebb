#!/usr/bin/env python3
"""Exhaustive and-composition check over small graphs.

For every input list with r <= --max-r graphs on mu <= --max-mu vertices, report
the shortest jump length, the budget r(k + kappa), and whether the length equals
r*k plus the summed vertex cover numbers.
"""

import argparse
import itertools

from msrecon.generators import PlainGraph, brute_vc, gen_cross_composition
from msrecon.solvers import solve_tj_shortest


def graphs_on(mu: int):
    pairs = list(itertools.combinations(range(1, mu + 1), 2))
    for r in range(len(pairs) + 1):
        for es in itertools.combinations(pairs, r):
            yield PlainGraph(mu, es)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-r", type=int, default=2)
    ap.add_argument("--max-mu", type=int, default=3)
    args = ap.parse_args()
    total = formula = iff = 0
    for mu in range(1, args.max_mu + 1):
        pool = list(graphs_on(mu))
        for kappa in range(mu + 1):
            for r in range(1, args.max_r + 1):
                for combo in itertools.product(pool, repeat=r):
                    inst, ell = gen_cross_composition([(g, kappa) for g in combo])
                    seq = solve_tj_shortest(inst)
                    vcs = [brute_vc(g) for g in combo]
                    total += 1
                    formula += seq is not None and len(seq) == r * (mu + 1) + sum(vcs)
                    iff += (seq is not None and len(seq) <= ell) == all(v <= kappa for v in vcs)
    print(f"instances: {total}")
    print(f"length == r*k + sum(vc): {formula}")
    print(f"within budget iff all vc <= kappa (no vc >= kappa filter): {iff}")


if __name__ == "__main__":
    main()
