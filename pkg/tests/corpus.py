"""Seeded instance corpora shared by the property and acceptance tests."""

from __future__ import annotations

import random
from functools import lru_cache

from msrecon.generators import PlainGraph, gen_random_instance, gen_random_layered, random_plain_graph
from msrecon.graph_core import Graph, Instance


@lru_cache(maxsize=None)
def mixed(count: int = 300) -> tuple[Instance, ...]:
    """Two thirds random graphs, one third layered paths; all with n <= 14 and k <= 4."""
    out = []
    n_random = 2 * count // 3
    for seed in range(n_random):
        out.append(gen_random_instance(seed, 8 + seed % 7))
    for seed in range(count - n_random):
        k = 2 + seed % 3
        path_len = {2: 5 + seed % 2, 3: 4 + seed % 2, 4: 4}[k]
        out.append(gen_random_layered(seed, k, path_len, 0.2 + 0.1 * (seed % 4)))
    return tuple(out)


def random_graphs(count: int, max_n: int = 12, seed: int = 0) -> list[tuple[Graph, int, int]]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        g = random_plain_graph(rng, n, rng.choice([0.2, 0.3, 0.45]))
        edges = [e for e in g.edges if e != (1, n)]
        out.append((Graph.from_edges(n, edges), 1, n))
    return out


def small_plain_graphs(count: int, seed: int = 0, max_n: int = 6) -> list[PlainGraph]:
    rng = random.Random(seed)
    graphs = [PlainGraph.complete(2), PlainGraph.complete(3), PlainGraph.empty(2), PlainGraph.cycle(5)]
    while len(graphs) < count:
        graphs.append(random_plain_graph(rng, rng.randint(1, max_n), rng.random()))
    return graphs
