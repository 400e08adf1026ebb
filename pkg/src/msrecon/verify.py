"""Independent replay of a claimed reconfiguration sequence.

Separation is re-checked from scratch by graph search after every move; nothing
here relies on canonical paths or crossing edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceSyntaxError
from .graph_core import Instance, separates
from .solvers import Move, ReconfigSequence


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    step: int = 0
    reason: str = ""

    def __bool__(self) -> bool:
        return self.accepted


def _reject(step: int, reason: str) -> Verdict:
    return Verdict(False, step, reason)


def verify_sequence(instance: Instance, seq: ReconfigSequence) -> Verdict:
    g, s, t = instance.graph, instance.s, instance.t
    current = set(instance.A)
    for step, m in enumerate(seq.moves, start=1):
        u, v = m.source, m.target
        if u not in current:
            return _reject(step, f"no token on {u}")
        if not 1 <= v <= g.n:
            return _reject(step, f"target {v} is not a vertex")
        if v in (s, t):
            return _reject(step, f"target {v} is a terminal")
        if v in current:
            return _reject(step, f"target {v} already holds a token")
        if seq.model == "slide" and not g.has_edge(u, v):
            return _reject(step, f"slide {u}->{v} does not follow an edge")
        current.remove(u)
        current.add(v)
        if not separates(g, s, t, current):
            return _reject(step, f"{sorted(current)} does not separate s from t")
    if current != set(instance.B):
        return _reject(len(seq.moves), "final set differs from B")
    return Verdict(True)


def format_sequence(seq: ReconfigSequence) -> str:
    return "\n".join([f"model {seq.model}", *(f"{m.source} {m.target}" for m in seq.moves)]) + "\n"


def parse_sequence(text: str) -> ReconfigSequence:
    rows = [
        (no, line.split())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows or rows[0][1][0] != "model" or len(rows[0][1]) != 2 or rows[0][1][1] not in ("slide", "jump"):
        raise InstanceSyntaxError("sequence file must start with 'model slide|jump'", rows[0][0] if rows else 1)
    model = rows[0][1][1]
    moves = []
    for no, toks in rows[1:]:
        try:
            u, v = map(int, toks)
        except ValueError:
            raise InstanceSyntaxError("move line must read '<from> <to>'", no) from None
        moves.append(Move(-1, u, v, model))
    return ReconfigSequence(model, moves)
