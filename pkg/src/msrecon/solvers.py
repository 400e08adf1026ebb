"""Reconfiguration solvers.

* ``solve_ts_shortest``: greedy forward slides; optimal for sliding.
* ``solve_tj_feasible``: greedy forward jumps; decides reachability.
* ``solve_tj_shortest``: BFS over forward-only, in-window configurations of the
  reduced instance; exact because some shortest sequence is of that form.
* ``oracle_bfs``: BFS over *all* minimum separators, no structural shortcuts.

Solvers that work on a reduced instance report moves in the caller's vertex
ids.  ``Move.path`` numbers tokens by the rank of their start vertex in
``sorted(A)``; the ``*_reduced`` helpers use reduced path indices instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Literal

from .canonical import canonical_paths
from .errors import NotForward, StateSpaceExceeded, TooLarge
from .graph_core import Instance, max_disjoint_paths, separates
from .preprocess import ReducedInstance, _refresh, _trim, preprocess_tj
from .separator_check import CrossingEdgeIndex

Model = Literal["slide", "jump"]

DEFAULT_MAX_STATES = 10**8
ORACLE_LIMIT = 10**6


@dataclass(frozen=True)
class Move:
    path: int
    source: int
    target: int
    model: Model = "jump"


@dataclass
class ReconfigSequence:
    model: Model
    moves: list[Move]
    shortest: bool = False
    states_explored: int = 0

    def __len__(self) -> int:
        return len(self.moves)


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def _tag_tokens(A: Iterable[int], pairs: Iterable[tuple[int, int]], model: Model) -> list[Move]:
    token_at = {v: i for i, v in enumerate(sorted(A))}
    moves = []
    for u, v in pairs:
        i = token_at.pop(u)
        token_at[v] = i
        moves.append(Move(i, u, v, model))
    return moves


def _lift(ri: ReducedInstance, instance: Instance, moves: list[Move], model: Model) -> list[Move]:
    return _tag_tokens(instance.A, ((ri.lift(m.source), ri.lift(m.target)) for m in moves), model)


def _stat(stats: dict | None, explored: int) -> None:
    if stats is not None:
        stats["states_explored"] = explored


def _frame(ri: ReducedInstance) -> tuple[list[int], list[int], list[int]]:
    """Per-path start position, direction towards B, and window width."""
    a, b = ri.cp.a, ri.cp.b
    sign = [1 if bi >= ai else -1 for ai, bi in zip(a, b)]
    width = [abs(bi - ai) + 1 for ai, bi in zip(a, b)]
    return list(a), sign, width


def greedy_jumps_reduced(ri: ReducedInstance, stats: dict | None = None) -> list[Move] | None:
    cp = ri.cp
    start, sign, width = _frame(ri)
    index = CrossingEdgeIndex.from_reduced(ri)
    off = [0] * cp.k
    pos = list(start)
    moves = []
    checks = 0
    while off != [w - 1 for w in width]:
        for i in range(cp.k):
            old = pos[i]
            for nd in range(width[i] - 1, off[i], -1):
                pos[i] = start[i] + sign[i] * nd
                checks += 1
                if index.still_separates(pos, i):
                    moves.append(Move(i, cp.vertex(i, old), cp.vertex(i, pos[i])))
                    off[i] = nd
                    break
                pos[i] = old
            else:
                continue
            break
        else:
            _stat(stats, checks)
            return None
    _stat(stats, checks)
    return moves


def shortest_jumps_reduced(
    ri: ReducedInstance, max_states: int = DEFAULT_MAX_STATES, stats: dict | None = None
) -> list[Move] | None:
    cp = ri.cp
    k = cp.k
    start, sign, width = _frame(ri)
    if prod(width) > max_states:
        raise StateSpaceExceeded(
            f"{prod(width)} in-window configurations exceed the cap of {max_states}"
        )
    index = CrossingEdgeIndex.from_reduced(ri)
    mult = [prod(width[:i]) for i in range(k)]
    goal = sum((w - 1) * m for w, m in zip(width, mult))
    parent: dict[int, tuple[int, int, int, int] | None] = {0: None}
    queue = deque([0])
    explored = 0
    while queue:
        code = queue.popleft()
        explored += 1
        if code == goal:
            break
        off = [(code // mult[i]) % width[i] for i in range(k)]
        pos = [start[i] + sign[i] * off[i] for i in range(k)]
        for i in range(k):
            here = pos[i]
            for nd in range(width[i] - 1, off[i], -1):
                nxt = code + (nd - off[i]) * mult[i]
                if nxt in parent:
                    continue
                pos[i] = start[i] + sign[i] * nd
                if index.still_separates(pos, i):
                    parent[nxt] = (code, i, here, pos[i])
                    queue.append(nxt)
            pos[i] = here
    _stat(stats, explored)
    if goal not in parent:
        return None
    moves = []
    code = goal
    while parent[code] is not None:
        code, i, p, q = parent[code]
        moves.append(Move(i, cp.vertex(i, p), cp.vertex(i, q)))
    moves.reverse()
    return moves


def solve_ts_shortest(instance: Instance, stats: dict | None = None) -> ReconfigSequence | None:
    base = Instance(instance.graph, instance.s, instance.t, instance.A, instance.B)
    cp = canonical_paths(base, max_disjoint_paths(base))
    trimmed, paths = _trim(base, cp)
    cp = _refresh(trimmed, paths)
    g, s, t = trimmed.graph, trimmed.s, trimmed.t
    pos = list(cp.a)
    current = set(trimmed.A)
    pairs = []
    checks = 0
    while pos != list(cp.b):
        for i in range(cp.k):
            if pos[i] == cp.b[i]:
                continue
            step = 1 if cp.b[i] > pos[i] else -1
            u, v = cp.vertex(i, pos[i]), cp.vertex(i, pos[i] + step)
            checks += 1
            if separates(g, s, t, (current - {u}) | {v}):
                current = (current - {u}) | {v}
                pos[i] += step
                pairs.append((trimmed.label(u), trimmed.label(v)))
                break
        else:
            _stat(stats, checks)
            return None
    _stat(stats, checks)
    return ReconfigSequence("slide", _tag_tokens(instance.A, pairs, "slide"), True, checks)


def solve_tj_feasible(instance: Instance, stats: dict | None = None) -> ReconfigSequence | None:
    ri = preprocess_tj(instance)
    local: dict = {}
    moves = greedy_jumps_reduced(ri, local)
    _stat(stats, local["states_explored"])
    if moves is None:
        return None
    return ReconfigSequence("jump", _lift(ri, instance, moves, "jump"), False, local["states_explored"])


def solve_tj_shortest(
    instance: Instance, max_states: int = DEFAULT_MAX_STATES, stats: dict | None = None
) -> ReconfigSequence | None:
    ri = preprocess_tj(instance)
    local: dict = {}
    moves = shortest_jumps_reduced(ri, max_states, local)
    _stat(stats, local["states_explored"])
    if moves is None:
        return None
    return ReconfigSequence("jump", _lift(ri, instance, moves, "jump"), True, local["states_explored"])


def oracle_bfs(
    instance: Instance,
    model: Model,
    forbidden: Iterable[int] = (),
    limit: int = ORACLE_LIMIT,
    stats: dict | None = None,
) -> ReconfigSequence | None:
    """Shortest sequence by BFS over the full reconfiguration graph.

    No separator visited may contain a vertex of ``forbidden``.
    """
    g, s, t = instance.graph, instance.s, instance.t
    k = instance.k
    if comb(g.n - 2, k) > limit:
        raise TooLarge(f"C({g.n - 2}, {k}) candidate sets exceed the oracle limit {limit}")
    forbidden = frozenset(forbidden)
    start, goal = frozenset(instance.A), frozenset(instance.B)
    if start & forbidden or goal & forbidden:
        _stat(stats, 0)
        return None
    free = [v for v in g.vertices() if v not in (s, t) and v not in forbidden]
    parent: dict[frozenset[int], tuple[frozenset[int], int, int] | None] = {start: None}
    queue = deque([start])
    explored = 0
    while queue:
        S = queue.popleft()
        explored += 1
        if S == goal:
            break
        for u in sorted(S):
            rest = S - {u}
            targets = g.adj[u] if model == "slide" else free
            for v in targets:
                if v in S or v in (s, t) or v in forbidden:
                    continue
                T = rest | {v}
                if T not in parent and separates(g, s, t, T):
                    parent[T] = (S, u, v)
                    queue.append(T)
    _stat(stats, explored)
    if goal not in parent:
        return None
    pairs = []
    S = goal
    while parent[S] is not None:
        S, u, v = parent[S]
        pairs.append((u, v))
    pairs.reverse()
    return ReconfigSequence(model, _tag_tokens(instance.A, pairs, model), True, explored)


def pathdecomp_from_solution(ri: ReducedInstance, seq: ReconfigSequence | list[Move]) -> PathDecomposition:
    """Expand a forward jump sequence on ``ri`` into a path decomposition of width k.

    A jump from ``u_{j,q}`` to ``u_{j,l}`` with remaining tokens ``X`` becomes
    ``X+{u_q}, X+{u_q,u_q+1}, ..., X+{u_l-1,u_l}, X+{u_l}``; the shared end bags of
    consecutive jumps appear once.
    """
    cp = ri.cp
    moves = seq.moves if isinstance(seq, ReconfigSequence) else seq
    current = set(ri.instance.A)
    bags = [frozenset(current)]

    def push(bag: set[int]) -> None:
        bag = frozenset(bag)
        if bag != bags[-1]:
            bags.append(bag)

    for n, m in enumerate(moves, start=1):
        i, q = cp.position_of[m.source]
        j, l = cp.position_of[m.target]
        step = 1 if cp.b[i] >= cp.a[i] else -1
        if i != j or m.source not in current:
            raise NotForward(f"move {n} does not move a token along its own path")
        if (l - q) * step <= 0 or (cp.b[i] - l) * step < 0:
            raise NotForward(f"move {n} from position {q} to {l} is not forward")
        X = current - {m.source}
        push(X | {m.source})
        for p in range(q, l, step):
            push(X | {cp.vertex(i, p), cp.vertex(i, p + step)})
        push(X | {m.target})
        current = X | {m.target}
    return PathDecomposition(tuple(bags))
