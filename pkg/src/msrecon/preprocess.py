"""Equivalence-preserving reductions for the token-jumping model.

Each rule works on a mutable copy (``_Work``) carrying the canonical paths along,
so paths stay canonical across rules without re-running max-flow.  The sliding
model may only use ``trim_to_windows``; the other rules add edges or delete
vertices in ways that change which slides exist.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .canonical import CanonicalPaths, canonical_paths
from .graph_core import DisjointPaths, Instance, max_disjoint_paths, relabel


@dataclass(frozen=True)
class ReducedInstance:
    instance: Instance
    cp: CanonicalPaths
    vertex_map: dict[int, int]
    fixed_tokens: frozenset[int]
    k_reduced: int

    def lift(self, v: int) -> int:
        return self.vertex_map[v]


class _Work:
    def __init__(self, instance: Instance, paths) -> None:
        g = instance.graph
        self.instance = instance
        self.adj = {v: set(g.adj[v]) for v in g.vertices()}
        self.A = set(instance.A)
        self.B = set(instance.B)
        self.paths = [list(p) for p in paths]

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def remove_vertex(self, v: int) -> None:
        for w in self.adj.pop(v):
            self.adj[w].discard(v)

    def export(self) -> tuple[Instance, list[tuple[int, ...]]]:
        edges = [(u, v) for u, ws in self.adj.items() for v in ws if u < v]
        inst, new_id = relabel(self.instance, self.adj.keys(), edges, self.A, self.B)
        paths = [tuple(new_id[v] for v in p) for p in self.paths]
        return inst, paths


def _refresh(instance: Instance, paths) -> CanonicalPaths:
    return canonical_paths(instance, DisjointPaths(tuple(map(tuple, paths))))


def _trim(instance: Instance, cp: CanonicalPaths) -> tuple[Instance, list]:
    w = _Work(instance, cp.paths)
    s, t = instance.s, instance.t
    new_paths = []
    for i, path in enumerate(cp.paths):
        lo, hi = cp.l[i], cp.r[i]
        for j, v in enumerate(path[1:-1], start=2):
            if not lo <= j <= hi:
                w.remove_vertex(v)
        inner = list(path[lo - 1 : hi])
        w.add_edge(s, inner[0])
        w.add_edge(inner[-1], t)
        new_paths.append([s, *inner, t])
    w.paths = new_paths
    return w.export()


def _live(cp: CanonicalPaths, u: int, v: int) -> bool:
    """Can the crossing edge u-v ever open an s-t path for an in-window configuration?"""
    (i, p), (j, q) = cp.position_of[u], cp.position_of[v]
    l, r = cp.l, cp.r
    return (r[i] > p and l[j] < q) or (r[j] > q and l[i] < p)


def _drop_inert(instance: Instance, cp: CanonicalPaths) -> tuple[Instance, list]:
    # Between paths whose tokens travel in opposite directions every crossing edge
    # is inert; dropping them lets all paths share one A-to-B orientation.
    w = _Work(instance, cp.paths)
    pos = cp.position_of
    for u, v in instance.graph.edges():
        if u in pos and v in pos and pos[u][0] != pos[v][0] and not _live(cp, u, v):
            w.remove_edge(u, v)
    return w.export()


def _contract(instance: Instance, cp: CanonicalPaths) -> tuple[Instance, list]:
    s, t = instance.s, instance.t
    w = _Work(instance, cp.paths)
    while True:
        on_path = {s, t}.union(*map(set, w.paths))
        seen: set[int] = set()
        for start in list(w.adj):
            if start in on_path or start in seen:
                continue
            comp, boundary = {start}, set()
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for x in w.adj[u]:
                    if x in on_path:
                        boundary.add(x)
                    elif x not in comp:
                        comp.add(x)
                        queue.append(x)
            seen |= comp
            assert not {s, t} <= boundary, "off-path s-t connection: A is not a separator"
            for u, v in combinations(sorted(boundary), 2):
                w.add_edge(u, v)
            for u in comp:
                w.remove_vertex(u)
        # contraction edges may be chords; skipped vertices become off-path next round
        inst, paths = w.export()
        short = _refresh(inst, paths)
        if list(short.paths) == paths:
            return inst, paths
        w = _Work(inst, short.paths)


def _reduce_degrees(instance: Instance, cp: CanonicalPaths) -> tuple[Instance, list]:
    s, t = instance.s, instance.t
    w = _Work(instance, cp.paths)
    protected = w.A | w.B | {s, t}
    changed = True
    while changed:
        changed = False
        pos = {v: (i, j) for i, p in enumerate(w.paths) for j, v in enumerate(p) if v not in (s, t)}
        for v in sorted(pos):
            own = pos[v][0]
            by_path: dict[int, list[tuple[int, int]]] = {}
            for x in w.adj[v]:
                if x in pos and pos[x][0] != own:
                    by_path.setdefault(pos[x][0], []).append((pos[x][1], x))
            for hits in by_path.values():
                if len(hits) >= 3:
                    hits.sort()
                    for _, x in hits[1:-1]:
                        w.remove_edge(v, x)
                    changed = True
        for v in sorted(pos):
            if v in protected or len(w.adj[v]) != 2:
                continue
            path = w.paths[pos[v][0]]
            j = path.index(v)
            x, y = path[j - 1], path[j + 1]
            assert w.adj[v] == {x, y}
            w.remove_vertex(v)
            w.add_edge(x, y)
            del path[j]
            changed = True
            break  # positions shifted; recompute
    return w.export()


def trim_to_windows(instance: Instance, cp: CanonicalPaths) -> Instance:
    """Delete path vertices outside each token window, reconnecting the window to s and t."""
    return _trim(instance, cp)[0]


def drop_inert_edges(instance: Instance, cp: CanonicalPaths) -> Instance:
    """Delete crossing edges that no in-window configuration can use to open an s-t path."""
    return _drop_inert(instance, cp)[0]


def contract_offpath(instance: Instance, cp: CanonicalPaths) -> Instance:
    return _contract(instance, cp)[0]


def reduce_degrees(instance: Instance, cp: CanonicalPaths) -> Instance:
    return _reduce_degrees(instance, cp)[0]


def remove_shared(instance: Instance) -> tuple[Instance, frozenset[int]]:
    """Delete every vertex of A ∩ B; its token never moves in a shortest sequence.

    The fixed tokens are reported under the input instance's labels.
    """
    shared = instance.A & instance.B
    keep = [v for v in instance.graph.vertices() if v not in shared]
    edges = [(u, v) for u, v in instance.graph.edges() if u not in shared and v not in shared]
    inst, _ = relabel(instance, keep, edges, instance.A - shared, instance.B - shared)
    return inst, frozenset(instance.label(v) for v in shared)


def preprocess_tj(instance: Instance) -> ReducedInstance:
    base = Instance(instance.graph, instance.s, instance.t, instance.A, instance.B)
    inst, fixed = remove_shared(base)
    cp = canonical_paths(inst, max_disjoint_paths(inst))
    while True:
        before = inst.graph
        for rule in (_trim, _drop_inert, _contract, _reduce_degrees):
            inst, paths = rule(inst, cp)
            cp = _refresh(inst, paths)
        if inst.graph == before:
            break
    vertex_map = {v: inst.label(v) for v in inst.graph.vertices()}
    return ReducedInstance(inst, cp, vertex_map, fixed, inst.k)
