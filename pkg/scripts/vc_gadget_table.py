#!/usr/bin/env python3
"""Shortest jump sequences on vertex-cover gadgets against |V| + vc."""

import argparse
import random

from msrecon.generators import PlainGraph, brute_vc, gen_vc_gadget, random_plain_graph
from msrecon.solvers import solve_tj_shortest


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    graphs = [("K2", PlainGraph.complete(2)), ("K3", PlainGraph.complete(3)), ("C5", PlainGraph.cycle(5))]
    for i in range(args.count):
        graphs.append((f"G{i}", random_plain_graph(rng, rng.randint(1, args.max_n), rng.random())))
    print(f"{'graph':>6} {'n':>3} {'m':>3} {'vc':>3} {'shortest':>8} {'n+vc':>5}  ok")
    for name, g in graphs:
        vc = brute_vc(g)
        got = len(solve_tj_shortest(gen_vc_gadget(g, vc)[0]))
        print(f"{name:>6} {g.n:>3} {len(g.edges):>3} {vc:>3} {got:>8} {g.n + vc:>5}  {'yes' if got == g.n + vc else 'NO'}")


if __name__ == "__main__":
    main()
