"""Instance factories: vertex-cover gadgets, the and-composition, random corpora.

Generated instances number their vertices canonically: ``s = 1``, then the path
interiors column by column (paths in order within a column), then ``t = n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import GenerationFailed, InstanceError, InstanceSyntaxError, MismatchedSizes, TooLarge
from .graph_core import Graph, Instance, min_separator_size, separates, validate_instance

GENERATION_ATTEMPTS = 100


@dataclass(frozen=True)
class PlainGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for u, v in self.edges:
            if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InstanceSyntaxError(f"bad edge {{{u},{v}}} for n={self.n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceSyntaxError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)

    @classmethod
    def complete(cls, n: int) -> "PlainGraph":
        return cls(n, tuple(combinations(range(1, n + 1), 2)))

    @classmethod
    def cycle(cls, n: int) -> "PlainGraph":
        return cls(n, tuple((i, i % n + 1) for i in range(1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> "PlainGraph":
        return cls(n, ())


def parse_edge_file(text: str) -> PlainGraph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 1:
        raise InstanceSyntaxError("first line must hold the vertex count", 1)
    try:
        n = int(rows[0][0])
        edges = tuple((int(u), int(v)) for u, v in rows[1:])
    except ValueError:
        raise InstanceSyntaxError("edge file expects '<n>' then '<u> <v>' lines") from None
    return PlainGraph(n, edges)


def format_edge_file(g: PlainGraph) -> str:
    return "\n".join([str(g.n), *(f"{u} {v}" for u, v in g.edges)]) + "\n"


def brute_vc(g: PlainGraph) -> int:
    """Smallest vertex cover by trying subsets in order of size."""
    if g.n > 20:
        raise TooLarge(f"brute-force vertex cover limited to 20 vertices, got {g.n}")
    masks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in g.edges]
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            cover = sum(1 << i for i in subset)
            if all(cover & e for e in masks):
                return size
    return g.n


def _layered(k: int, columns: int, extra: Iterable[tuple[int, int, int, int]]) -> tuple[Instance, Callable[[int, int], int]]:
    """``k`` paths with ``columns`` interior columns numbered 2..columns+1.

    ``extra`` holds (path, column, path, column) edges, paths 1-based.
    """
    n = k * columns + 2
    s, t = 1, n

    def u(i: int, c: int) -> int:
        if c == 1:
            return s
        if c == columns + 2:
            return t
        return 1 + (c - 2) * k + i

    edges = set()
    for i in range(1, k + 1):
        for c in range(1, columns + 2):
            edges.add((u(i, c), u(i, c + 1)))
    for i, c, j, d in extra:
        x, y = u(i, c), u(j, d)
        edges.add((min(x, y), max(x, y)))
    A = frozenset(u(i, 2) for i in range(1, k + 1))
    B = frozenset(u(i, columns + 1) for i in range(1, k + 1))
    return Instance(Graph.from_edges(n, sorted(edges)), s, t, A, B), u


def gen_vc_gadget(g: PlainGraph, kappa: int) -> tuple[Instance, int]:
    """Each vertex v of ``g`` becomes a path s, s_v, v, t_v, t; edges of ``g`` join the middles."""
    if not 0 <= kappa <= g.n:
        raise InstanceError(f"kappa={kappa} must lie in 0..{g.n}")
    inst, _ = _layered(g.n, 3, ((a, 3, b, 3) for a, b in g.edges))
    return inst, g.n + kappa


def gen_cross_composition(graphs: Sequence[tuple[PlainGraph, int]]) -> tuple[Instance, int]:
    """And-compose vertex cover instances sharing vertex count mu and budget kappa.

    Graph ``G_i`` sits on column ``4i - 1`` of paths 1..mu; between consecutive
    graphs a column of the first mu paths is fully joined to three vertices of
    the extra path ``k = mu + 1``, forcing every token to gather there first.
    """
    if not graphs:
        raise InstanceError("need at least one graph")
    mus = {g.n for g, _ in graphs}
    kappas = {kappa for _, kappa in graphs}
    if len(mus) != 1 or len(kappas) != 1:
        raise MismatchedSizes(f"inputs disagree: mu in {sorted(mus)}, kappa in {sorted(kappas)}")
    (mu,), (kappa,) = mus, kappas
    r, k = len(graphs), mu + 1
    extra = []
    for i, (g, _) in enumerate(graphs, start=1):
        q = 4 * i - 1
        extra.extend((a, q, b, q) for a, b in g.edges)
        if i < r:
            extra.extend((a, q + 2, k, c) for a in range(1, mu + 1) for c in (q - 1, q + 1, q + 3))
    if r >= 2:
        extra.extend((k, 4 * r - 2, a, 4 * r) for a in range(1, mu + 1))
    inst, _ = _layered(k, 4 * r - 1, extra)
    return inst, r * (k + kappa)


def gen_random_layered(seed: int, k: int, path_len: int, p: float) -> Instance:
    """Parallel paths with random crossing edges between neighbouring columns."""
    if k < 1 or path_len < 3:
        raise InstanceError("need k >= 1 and path_len >= 3")
    rng = random.Random(seed)
    columns = path_len - 2
    for _ in range(GENERATION_ATTEMPTS):
        extra = [
            (i, c, j, c + 1)
            for c in range(2, columns + 1)
            for i in range(1, k + 1)
            for j in range(1, k + 1)
            if i != j and rng.random() < p
        ]
        inst, _ = _layered(k, columns, extra)
        try:
            validate_instance(inst)
        except InstanceError:
            continue
        return inst
    raise GenerationFailed(f"no valid layered instance after {GENERATION_ATTEMPTS} attempts")


def minimum_separators(graph: Graph, s: int, t: int, k: int) -> list[frozenset[int]]:
    inner = [v for v in graph.vertices() if v not in (s, t)]
    return [frozenset(S) for S in combinations(inner, k) if separates(graph, s, t, S)]


def gen_random_instance(seed: int, n: int, p: float = 0.1, max_k: int = 4) -> Instance:
    """Random instance on ``n`` vertices with s = 1, t = n.

    A few random s-t paths are laid down, leftover vertices hang off random
    vertices, and sparse extra edges are sprinkled on top (never s-t).  Graphs
    with a single minimum separator are redrawn; A and B are two distinct ones.
    """
    rng = random.Random(seed)
    inner = list(range(2, n))
    for _ in range(GENERATION_ATTEMPTS):
        rng.shuffle(inner)
        k0 = rng.randint(1, min(max_k, max(1, len(inner) // 2)))
        cuts = sorted(rng.sample(range(1, len(inner)), k0 - 1)) if k0 > 1 else []
        spare = rng.randint(0, len(inner) // 4)
        body, loose = inner[: len(inner) - spare], inner[len(inner) - spare :]
        cuts = [c for c in cuts if c < len(body)]
        edges = set()
        for seg in (body[a:b] for a, b in zip([0, *cuts], [*cuts, len(body)])):
            if seg:
                chain = [1, *seg, n]
                edges.update(zip(chain, chain[1:]))
        for v in loose:
            for w in rng.sample([x for x in range(1, n + 1) if x != v], rng.randint(1, 3)):
                edges.add((v, w))
        for u, v in combinations(range(1, n + 1), 2):
            if (u, v) != (1, n) and rng.random() < p:
                edges.add((u, v))
        edges = {(min(u, v), max(u, v)) for u, v in edges} - {(1, n)}
        g = Graph.from_edges(n, sorted(edges))
        k = min_separator_size(Instance(g, 1, n, frozenset(), frozenset()))
        if not 1 <= k <= max_k:
            continue
        seps = minimum_separators(g, 1, n, k)
        if len(seps) < 2:
            continue
        A, B = rng.sample(seps, 2)
        return Instance(g, 1, n, A, B)
    raise GenerationFailed(f"no random instance with two separators of size <= {max_k} after {GENERATION_ATTEMPTS} attempts")


def random_plain_graph(rng: random.Random, n: int, p: float) -> PlainGraph:
    return PlainGraph(n, tuple(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))
