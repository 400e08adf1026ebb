"""Command-line front end.

Exit codes: 0 success, 1 verification rejected, 2 usage error, 3 invalid input,
4 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .errors import InstanceError, ResourceLimit
from .generators import (
    gen_cross_composition,
    gen_random_layered,
    gen_vc_gadget,
    parse_edge_file,
)
from .graph_core import Instance, format_instance, parse_instance
from .kernel_ell import kernelize
from .preprocess import preprocess_tj
from .solvers import (
    DEFAULT_MAX_STATES,
    ReconfigSequence,
    oracle_bfs,
    solve_tj_feasible,
    solve_tj_shortest,
    solve_ts_shortest,
)
from .verify import parse_sequence, verify_sequence


def _read_instance(path: str) -> Instance:
    return parse_instance(Path(path).read_text())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def result_document(model: str, seq: ReconfigSequence | None, shortest: bool, stats: dict, elapsed: float) -> dict:
    doc: dict = {"model": model, "feasible": seq is not None, "shortest": shortest}
    if seq is not None:
        doc["length"] = len(seq)
        doc["moves"] = [{"path": m.path, "from_vertex": m.source, "to_vertex": m.target} for m in seq.moves]
    else:
        doc["moves"] = []
    doc["stats"] = {
        "states_explored": stats.get("states_explored", 0),
        "elapsed_ms": round(elapsed * 1000, 3),
    }
    return doc


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _read_instance(args.file)
    stats: dict = {}
    t0 = time.perf_counter()
    if args.model == "slide":
        seq, shortest = solve_ts_shortest(inst, stats), True
    elif args.shortest:
        seq, shortest = solve_tj_shortest(inst, args.max_states, stats), True
    else:
        seq, shortest = solve_tj_feasible(inst, stats), False
    print(json.dumps(result_document(args.model, seq, shortest, stats, time.perf_counter() - t0)))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    inst = _read_instance(args.file)
    stats: dict = {}
    t0 = time.perf_counter()
    seq = oracle_bfs(inst, args.model, stats=stats)
    print(json.dumps(result_document(args.model, seq, True, stats, time.perf_counter() - t0)))
    return 0


def cmd_preprocess(args: argparse.Namespace) -> int:
    ri = preprocess_tj(_read_instance(args.file))
    _emit(format_instance(ri.instance, [f"reduced from {args.file}"]), args.output)
    if args.map_output:
        Path(args.map_output).write_text("".join(f"{v} {ri.lift(v)}\n" for v in sorted(ri.vertex_map)))
    if not args.quiet:
        print(
            f"n={ri.instance.n} m={ri.instance.graph.m} k={ri.k_reduced} fixed={len(ri.fixed_tokens)}",
            file=sys.stderr,
        )
    return 0


def cmd_kernelize(args: argparse.Namespace) -> int:
    outcome = kernelize(_read_instance(args.file), args.budget)
    if outcome.status == "kernel":
        _emit(format_instance(outcome.instance, [f"ell {outcome.budget}"]), args.output)
    else:
        print(f"DECIDED {outcome.status.upper()}")
        if not args.quiet and outcome.reason:
            print(outcome.reason, file=sys.stderr)
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.kind == "vc-gadget":
        if not args.graph or args.kappa is None:
            raise _Usage("vc-gadget needs --graph and --kappa")
        inst, ell = gen_vc_gadget(parse_edge_file(Path(args.graph).read_text()), args.kappa)
    elif args.kind == "cross":
        if not args.graphs or args.kappa is None:
            raise _Usage("cross needs --graphs and --kappa")
        graphs = [(parse_edge_file(Path(p).read_text()), args.kappa) for p in args.graphs]
        inst, ell = gen_cross_composition(graphs)
    else:
        if None in (args.seed, args.k, args.len, args.p):
            raise _Usage("random needs --seed, --k, --len and --p")
        inst, ell = gen_random_layered(args.seed, args.k, args.len, args.p), None
    comments = [] if ell is None else [f"ell {ell}"]
    if args.output:
        Path(args.output).write_text(format_instance(inst, comments))
        if ell is not None:
            print(f"ell {ell}")
    else:
        sys.stdout.write(format_instance(inst, comments))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    inst = _read_instance(args.instance)
    seq = parse_sequence(Path(args.sequence).read_text())
    verdict = verify_sequence(inst, seq)
    if verdict.accepted:
        if not args.quiet:
            print("ACCEPT")
        return 0
    print(f"REJECT step={verdict.step} reason={verdict.reason}")
    return 1


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # let run() map usage errors to exit code 2
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="msrecon", description="Minimum s-t separator reconfiguration.")
    parser.add_argument("--quiet", action="store_true", help="suppress informational output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", parents=[common], help="solve an instance")
    p.add_argument("--model", choices=("slide", "jump"), required=True)
    p.add_argument("--shortest", action="store_true", help="guarantee a minimum number of jumps")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive BFS over all minimum separators")
    p.add_argument("--model", choices=("slide", "jump"), required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("preprocess", parents=[common], help="apply the token-jumping reductions")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--map-output", help="write '<reduced-id> <original-id>' lines here")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("kernelize", parents=[common], help="kernel for a jump budget")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("generate", parents=[common], help="write a generated instance")
    p.add_argument("kind", choices=("vc-gadget", "cross", "random"))
    p.add_argument("--graph")
    p.add_argument("--graphs", nargs="+")
    p.add_argument("--kappa", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--len", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="check a move sequence")
    p.add_argument("instance")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except InstanceError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 3
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())
