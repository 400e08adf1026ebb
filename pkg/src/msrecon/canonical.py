"""Chordless canonical paths, token positions and movement windows.

Positions are 1-based along each path with ``s`` at position 1, so the vertex
at position ``j`` of path ``i`` is ``paths[i][j - 1]``.  Path indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotOnePerPath, SeparatorOffPath
from .graph_core import DisjointPaths, Graph, Instance


@dataclass(frozen=True)
class Configuration:
    pos: tuple[int, ...]


@dataclass(frozen=True)
class CanonicalPaths:
    paths: tuple[tuple[int, ...], ...]
    position_of: dict[int, tuple[int, int]]
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.paths)

    @property
    def l(self) -> tuple[int, ...]:  # noqa: E743
        return tuple(map(min, self.a, self.b))

    @property
    def r(self) -> tuple[int, ...]:
        return tuple(map(max, self.a, self.b))

    def length(self, i: int) -> int:
        return len(self.paths[i])

    def vertex(self, i: int, j: int) -> int:
        return self.paths[i][j - 1]

    def on_path(self, v: int) -> bool:
        return v in self.position_of


def shortcut(graph: Graph, path: Sequence[int]) -> tuple[int, ...]:
    """Remove chords by always stepping to the farthest later neighbour on the path.

    A single pass leaves no chord: if ``p[x]`` saw some ``p[y]`` with ``y > x+1``
    it would have jumped there.
    """
    index = {v: j for j, v in enumerate(path)}
    out = [path[0]]
    j = 0
    while j < len(path) - 1:
        j = max(index[w] for w in graph.adj[path[j]] if w in index and index[w] > j)
        out.append(path[j])
    return tuple(out)


def _positions(paths: Sequence[Sequence[int]]) -> dict[int, tuple[int, int]]:
    pos = {}
    for i, p in enumerate(paths):
        for j, v in enumerate(p[1:-1], start=2):
            pos[v] = (i, j)
    return pos


def _token_positions(
    paths: Sequence[Sequence[int]],
    position_of: dict[int, tuple[int, int]],
    S: Iterable[int],
    name: str,
) -> tuple[int, ...]:
    found: list[list[int]] = [[] for _ in paths]
    for v in S:
        if v not in position_of:
            raise SeparatorOffPath(f"{name} vertex {v} lies on no canonical path")
        i, j = position_of[v]
        found[i].append(j)
    for i, js in enumerate(found):
        if len(js) != 1:
            raise NotOnePerPath(f"{name} hits canonical path {i} {len(js)} times")
    return tuple(js[0] for js in found)


def canonical_paths(instance: Instance, dp: DisjointPaths) -> CanonicalPaths:
    g = instance.graph
    paths = [tuple(p) for p in dp.paths]
    while True:
        short = [shortcut(g, p) for p in paths]
        if short == paths:
            break
        paths = short
    position_of = _positions(paths)
    a = _token_positions(paths, position_of, instance.A, "A")
    b = _token_positions(paths, position_of, instance.B, "B")
    return CanonicalPaths(tuple(paths), position_of, a, b)


def locate_tokens(cp: CanonicalPaths, S: Iterable[int]) -> Configuration:
    try:
        return Configuration(_token_positions(cp.paths, cp.position_of, S, "set"))
    except SeparatorOffPath as exc:
        raise NotOnePerPath(str(exc)) from None


def windows(cp: CanonicalPaths) -> list[tuple[int, int]]:
    return list(zip(cp.l, cp.r))
