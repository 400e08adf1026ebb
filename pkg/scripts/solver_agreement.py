#!/usr/bin/env python3
"""Compare every solver with the exhaustive oracle on seeded random instances."""

import argparse
import time

from msrecon.generators import gen_random_instance
from msrecon.solvers import oracle_bfs, solve_tj_feasible, solve_tj_shortest, solve_ts_shortest
from msrecon.verify import verify_sequence


def length(seq):
    return None if seq is None else len(seq)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t0 = time.perf_counter()
    disagreements = extra_jumps = 0
    for i in range(args.instances):
        inst = gen_random_instance(args.seed + i, 8 + i % 7)
        tj, ts, greedy = solve_tj_shortest(inst), solve_ts_shortest(inst), solve_tj_feasible(inst)
        if length(tj) != length(oracle_bfs(inst, "jump")) or length(ts) != length(oracle_bfs(inst, "slide")):
            disagreements += 1
        for seq in (tj, ts, greedy):
            if seq is not None and not verify_sequence(inst, seq).accepted:
                disagreements += 1
        if greedy is not None:
            extra_jumps += len(greedy) - len(tj)
    print(f"instances: {args.instances}, disagreements: {disagreements}")
    print(f"greedy used {extra_jumps} jumps more than optimal in total")
    print(f"elapsed: {time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
