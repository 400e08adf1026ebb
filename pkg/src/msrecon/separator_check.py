"""Separator tests on reduced instances via crossing edges.

Once every vertex lies on a canonical path, a one-token-per-path configuration
fails to separate exactly when some crossing edge ``u_{j,q} -- u_{i,p}`` has the
token of path ``j`` beyond ``q`` and the token of path ``i`` before ``p``: then
``s -> P_j -> u_{j,q} -> u_{i,p} -> P_i -> t`` is open.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .canonical import CanonicalPaths, Configuration
from .graph_core import Graph
from .preprocess import ReducedInstance


@dataclass(frozen=True)
class CrossingEdgeIndex:
    # by_pair[(i, j)] lists (position on P_i, position on P_j) for i < j
    by_pair: dict[tuple[int, int], tuple[tuple[int, int], ...]]
    # incident[i] lists (p, j, q): an edge from position p on P_i to position q on P_j
    incident: tuple[tuple[tuple[int, int, int], ...], ...]

    @classmethod
    def build(cls, graph: Graph, cp: CanonicalPaths) -> "CrossingEdgeIndex":
        by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
        incident: list[list[tuple[int, int, int]]] = [[] for _ in range(cp.k)]
        for u, v in graph.edges():
            if u not in cp.position_of or v not in cp.position_of:
                continue
            (i, p), (j, q) = cp.position_of[u], cp.position_of[v]
            if i == j:
                continue
            if i > j:
                (i, p), (j, q) = (j, q), (i, p)
            by_pair.setdefault((i, j), []).append((p, q))
            incident[i].append((p, j, q))
            incident[j].append((q, i, p))
        return cls(
            {key: tuple(sorted(val)) for key, val in by_pair.items()},
            tuple(tuple(sorted(x)) for x in incident),
        )

    @classmethod
    def from_reduced(cls, ri: ReducedInstance) -> "CrossingEdgeIndex":
        return cls.build(ri.instance.graph, ri.cp)

    def separates(self, pos: Sequence[int]) -> bool:
        for (i, j), edges in self.by_pair.items():
            pi, pj = pos[i], pos[j]
            for p, q in edges:
                if (pi > p and pj < q) or (pj > q and pi < p):
                    return False
        return True

    def still_separates(self, pos: Sequence[int], moved: int) -> bool:
        """Like ``separates`` but only re-checks edges at the path whose token moved."""
        pm = pos[moved]
        for p, j, q in self.incident[moved]:
            pj = pos[j]
            if (pm > p and pj < q) or (pj > q and pm < p):
                return False
        return True

    def edge_count(self) -> int:
        return sum(len(v) for v in self.by_pair.values())


def is_config_separator(ri: ReducedInstance, c: Configuration) -> bool:
    return CrossingEdgeIndex.from_reduced(ri).separates(c.pos)


def _interior_free(ri: ReducedInstance) -> set[int]:
    inst = ri.instance
    return set(inst.graph.vertices()) - inst.A - inst.B - {inst.s, inst.t}


def unskippable_vertices(ri: ReducedInstance) -> frozenset[int]:
    """Vertices outside A, B, s, t with two neighbours on one foreign canonical path."""
    g, cp = ri.instance.graph, ri.cp
    found = set()
    for v in _interior_free(ri):
        own = cp.position_of[v][0]
        counts: dict[int, int] = {}
        for x in g.adj[v]:
            if x in cp.position_of and cp.position_of[x][0] != own:
                i = cp.position_of[x][0]
                counts[i] = counts.get(i, 0) + 1
        if any(c >= 2 for c in counts.values()):
            found.add(v)
    return frozenset(found)


def unskippable_edges(ri: ReducedInstance) -> frozenset[frozenset[int]]:
    g, cp = ri.instance.graph, ri.cp
    free = _interior_free(ri)
    return frozenset(
        frozenset((u, v))
        for u, v in g.edges()
        if u in free and v in free and cp.position_of[u][0] != cp.position_of[v][0]
    )
