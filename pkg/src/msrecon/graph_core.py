"""Graphs, instances, the instance file format and disjoint s-t paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    InstanceSyntaxError,
    InvalidSet,
    NotMinimum,
    NotSeparator,
    TerminalsAdjacent,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    ``adj[v]`` is the ascending tuple of neighbours of ``v``; ``adj[0]`` is unused.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {{{u},{v}}} outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(x)) for x in nbrs))

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(x) for x in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(1, self.n + 1):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    @property
    def m(self) -> int:
        return sum(len(x) for x in self.adj) // 2

    def vertices(self) -> range:
        return range(1, self.n + 1)


@dataclass(frozen=True)
class Instance:
    """A reconfiguration instance ``(G, s, t, A, B)``.

    ``labels[v]`` names the vertex ``v`` in some ancestor instance; reductions
    compose it so that results can be lifted back.  ``None`` means identity.
    """

    graph: Graph
    s: int
    t: int
    A: frozenset[int]
    B: frozenset[int]
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def k(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return self.graph.n

    def label(self, v: int) -> int:
        return v if self.labels is None else self.labels[v]


@dataclass(frozen=True)
class DisjointPaths:
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


def separates(graph: Graph, s: int, t: int, S: Iterable[int]) -> bool:
    """True iff every s-t path in ``graph`` meets ``S``."""
    blocked = set(S)
    if s in blocked or t in blocked:
        raise InvalidSet("separator may not contain s or t")
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in graph.adj[u]:
            if w == t:
                return False
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return True


def is_separator(instance: Instance, S: Iterable[int]) -> bool:
    return separates(instance.graph, instance.s, instance.t, S)


def _vertex_disjoint_paths(graph: Graph, s: int, t: int) -> list[list[int]]:
    # Vertex-split digraph: v -> (2v in, 2v+1 out); internal vertices carry capacity 1.
    res: dict[int, dict[int, int]] = {}

    def arc(x: int, y: int, cap: int) -> None:
        res.setdefault(x, {})
        res.setdefault(y, {})
        res[x][y] = res[x].get(y, 0) + cap
        res[y].setdefault(x, 0)

    for v in graph.vertices():
        if v not in (s, t):
            arc(2 * v, 2 * v + 1, 1)
    for u in graph.vertices():
        for v in graph.adj[u]:
            arc(2 * u + 1, 2 * v, 1)

    source, sink = 2 * s + 1, 2 * t
    if source not in res or sink not in res:
        return []

    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, cap in res[x].items():
                if cap > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x

    def flows(u: int, v: int) -> bool:
        # flow on u_out -> v_in equals the residual of its reverse arc
        return res[2 * v].get(2 * u + 1, 0) > 0

    paths = []
    for first in graph.adj[s]:
        if not flows(s, first):
            continue
        path = [s, first]
        while path[-1] != t:
            cur = path[-1]
            path.append(next(w for w in graph.adj[cur] if flows(cur, w)))
        paths.append(path)
    return paths


def max_disjoint_paths(instance: Instance) -> DisjointPaths:
    """Maximum set of internally disjoint s-t paths (Edmonds-Karp on the split digraph)."""
    paths = _vertex_disjoint_paths(instance.graph, instance.s, instance.t)
    return DisjointPaths(tuple(tuple(p) for p in paths))


def min_separator_size(instance: Instance) -> int:
    return len(max_disjoint_paths(instance))


def validate_instance(instance: Instance) -> None:
    g, s, t = instance.graph, instance.s, instance.t
    for name, v in (("s", s), ("t", t)):
        if not 1 <= v <= g.n:
            raise InstanceSyntaxError(f"{name}={v} outside 1..{g.n}")
    if s == t:
        raise InstanceSyntaxError("s and t must differ")
    if g.has_edge(s, t):
        raise TerminalsAdjacent(f"s={s} and t={t} are adjacent")
    for name, S in (("A", instance.A), ("B", instance.B)):
        if any(not 1 <= v <= g.n for v in S):
            raise InstanceSyntaxError(f"{name} contains a vertex outside 1..{g.n}")
        if s in S or t in S:
            raise InvalidSet(f"{name} contains a terminal")
    if len(instance.A) != len(instance.B):
        raise NotMinimum(f"|A|={len(instance.A)} differs from |B|={len(instance.B)}")
    for name, S in (("A", instance.A), ("B", instance.B)):
        if not is_separator(instance, S):
            raise NotSeparator(name)
    k = min_separator_size(instance)
    if instance.k != k:
        raise NotMinimum(f"|A|=|B|={instance.k} exceeds the minimum separator size {k}")


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise InstanceSyntaxError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_instance(text: str, validate: bool = True) -> Instance:
    """Parse the ``p msr`` line format and validate the result."""
    lines = [
        (no, line.split())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    it = iter(lines)

    def expect(tag: str) -> tuple[int, list[str]]:
        try:
            no, toks = next(it)
        except StopIteration:
            raise InstanceSyntaxError(f"missing '{tag}' line", len(text.splitlines()) + 1) from None
        if toks[0] != tag:
            raise InstanceSyntaxError(f"expected '{tag}' line, found '{toks[0]}'", no)
        return no, toks[1:]

    no, head = expect("p")
    if len(head) != 3 or head[0] != "msr":
        raise InstanceSyntaxError("header must read 'p msr <n> <m>'", no)
    n, m = _ints(head[1:], no)
    if n < 2 or m < 0:
        raise InstanceSyntaxError("need n >= 2 and m >= 0", no)

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for _ in range(m):
        no, toks = expect("e")
        if len(toks) != 2:
            raise InstanceSyntaxError("edge line must read 'e <u> <v>'", no)
        u, v = _ints(toks, no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise InstanceSyntaxError(f"edge endpoint outside 1..{n}", no)
        if u == v:
            raise InstanceSyntaxError(f"self-loop at {u}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InstanceSyntaxError(f"duplicate edge {{{u},{v}}}", no)
        seen.add(key)
        edges.append(key)

    no, toks = expect("s")
    if len(toks) != 1:
        raise InstanceSyntaxError("'s' takes one vertex", no)
    (s,) = _ints(toks, no)
    no, toks = expect("t")
    if len(toks) != 1:
        raise InstanceSyntaxError("'t' takes one vertex", no)
    (t,) = _ints(toks, no)
    sets = []
    for tag in ("A", "B"):
        no, toks = expect(tag)
        vals = _ints(toks, no)
        if len(set(vals)) != len(vals):
            raise InstanceSyntaxError(f"repeated vertex in {tag}", no)
        sets.append(frozenset(vals))
    extra = next(it, None)
    if extra is not None:
        raise InstanceSyntaxError(f"unexpected '{extra[1][0]}' line after B", extra[0])

    inst = Instance(Graph.from_edges(n, edges), s, t, sets[0], sets[1])
    if validate:
        validate_instance(inst)
    return inst


def format_instance(instance: Instance, comments: Iterable[str] = ()) -> str:
    g = instance.graph
    out = [f"# {c}" for c in comments]
    out.append(f"p msr {g.n} {g.m}")
    out.extend(f"e {u} {v}" for u, v in g.edges())
    out.append(f"s {instance.s}")
    out.append(f"t {instance.t}")
    out.append(" ".join(["A", *map(str, sorted(instance.A))]).rstrip())
    out.append(" ".join(["B", *map(str, sorted(instance.B))]).rstrip())
    return "\n".join(out) + "\n"


def relabel(
    instance: Instance,
    keep: Iterable[int],
    edges: Iterable[tuple[int, int]],
    A: Iterable[int] | None = None,
    B: Iterable[int] | None = None,
) -> tuple[Instance, dict[int, int]]:
    """Build the instance induced on ``keep`` with edge set ``edges``, renumbered densely.

    Returns the new instance and the old-id -> new-id map.  Labels compose.
    """
    order = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(order, start=1)}
    pairs = {(min(u, v), max(u, v)) for u, v in edges}
    g = Graph.from_edges(len(order), sorted((new_id[u], new_id[v]) for u, v in pairs))
    labels = (0, *(instance.label(v) for v in order))
    A = instance.A if A is None else A
    B = instance.B if B is None else B
    inst = Instance(
        g,
        new_id[instance.s],
        new_id[instance.t],
        frozenset(new_id[v] for v in A),
        frozenset(new_id[v] for v in B),
        labels,
    )
    return inst, new_id
