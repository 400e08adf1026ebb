"""Kernelization for the number of allowed jumps.

Rules run in order on the fully reduced instance; the first one that decides
wins.  The closing size guard only fires on no-instances: in a reduced
yes-instance at most ``2*ell`` vertices ever hold a token, every other interior
vertex has degree >= 3 with at most one neighbour per foreign path and all of
its crossing edges lead to occupied vertices, so ``|V| <= 4*ell^2 + 2*ell + 2``
and ``|E| <= 8*ell^2 - ell``, both inside the emitted bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import networkx as nx

from .graph_core import Instance
from .preprocess import ReducedInstance, preprocess_tj
from .separator_check import unskippable_vertices

Status = Literal["kernel", "yes", "no"]


def vertex_bound(ell: int) -> int:
    return 8 * ell * ell + 5 * ell


def edge_bound(ell: int) -> int:
    return 12 * ell * ell + 7 * ell


@dataclass(frozen=True)
class KernelOutcome:
    status: Status
    budget: int
    reduced: ReducedInstance | None = None
    reason: str = ""

    @property
    def instance(self) -> Instance | None:
        return None if self.reduced is None else self.reduced.instance


def foreign_edge_graph(ri: ReducedInstance) -> nx.Graph:
    """Crossing edges between vertices outside A, B, s, t and the unskippable set."""
    inst = ri.instance
    drop = unskippable_vertices(ri) | inst.A | inst.B | {inst.s, inst.t}
    gamma = nx.Graph()
    gamma.add_nodes_from(v for v in inst.graph.vertices() if v not in drop)
    pos = ri.cp.position_of
    for u, v in inst.graph.edges():
        if u in drop or v in drop:
            continue
        if pos[u][0] != pos[v][0]:
            gamma.add_edge(u, v)
    return gamma


def kernelize(instance: Instance, budget: int) -> KernelOutcome:
    if budget < 0:
        raise ValueError("budget must be non-negative")
    ell = budget
    ri = preprocess_tj(instance)
    inst, cp = ri.instance, ri.cp

    if inst.A == inst.B:
        return KernelOutcome("yes", ell, ri, "A equals B after reduction")
    if inst.k > ell:
        return KernelOutcome("no", ell, ri, f"k={inst.k} exceeds the budget; every token must jump")

    longest = max(cp.length(i) for i in range(cp.k))
    if longest > 4 * (ell + 1) ** 2 + 4:
        return KernelOutcome("no", ell, ri, f"canonical path with {longest} vertices")

    on_long = sum(cp.length(i) for i in range(cp.k) if cp.length(i) > 4 * ell + 4)
    if on_long > 2 * (2 * ell + 2) ** 2 + 2 * ell + 2:
        return KernelOutcome("no", ell, ri, f"{on_long} vertices on long canonical paths")

    matching = nx.max_weight_matching(foreign_edge_graph(ri), maxcardinality=True)
    if len(matching) > ell:
        return KernelOutcome("no", ell, ri, f"{len(matching)} disjoint unskippable edges")

    if inst.n > vertex_bound(ell) or inst.graph.m > edge_bound(ell):
        return KernelOutcome("no", ell, ri, "reduced instance exceeds the yes-instance size bound")
    return KernelOutcome("kernel", ell, ri, "")
