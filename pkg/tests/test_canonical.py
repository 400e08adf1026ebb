import pytest

from corpus import mixed
from msrecon.canonical import canonical_paths, locate_tokens, shortcut, windows
from msrecon.errors import NotOnePerPath
from msrecon.graph_core import Graph, Instance, is_separator, max_disjoint_paths, parse_instance
from msrecon.generators import minimum_separators


def _cp(inst):
    return canonical_paths(inst, max_disjoint_paths(inst))


def test_shortcut_removes_chord():
    g = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 4)])
    assert shortcut(g, (1, 2, 3, 4, 5)) == (1, 2, 4, 5)


def test_fix_a_positions(fix_a):
    cp = _cp(fix_a)
    assert cp.a == (2, 2) and cp.b == (3, 3)
    assert windows(cp) == [(2, 3), (2, 3)]
    assert cp.vertex(0, 2) == 2


def test_degenerate_window():
    inst = parse_instance("p msr 4 3\ne 1 2\ne 2 3\ne 3 4\ns 1\nt 4\nA 2\nB 2\n")
    assert windows(_cp(inst)) == [(2, 2)]


def test_reversed_window_normalised(fix_a):
    flipped = Instance(fix_a.graph, fix_a.s, fix_a.t, fix_a.B, fix_a.A)
    cp = _cp(flipped)
    assert cp.a == (3, 3) and windows(cp) == [(2, 3), (2, 3)]


def test_locate_rejects_two_on_one_path(fix_a):
    with pytest.raises(NotOnePerPath):
        locate_tokens(_cp(fix_a), {2, 3})


def test_locate_rejects_off_path():
    # vertex 5 hangs off the path and is never on a canonical path
    inst = parse_instance("p msr 5 4\ne 1 2\ne 2 3\ne 3 4\ne 2 5\ns 1\nt 4\nA 2\nB 3\n")
    with pytest.raises(NotOnePerPath):
        locate_tokens(_cp(inst), {5})


@pytest.mark.parametrize("inst", mixed()[::10])
def test_paths_chordless_and_hit_once(inst):
    cp = _cp(inst)
    g = inst.graph
    for p in cp.paths:
        index = {v: j for j, v in enumerate(p)}
        for j, v in enumerate(p):
            assert all(abs(index[w] - j) == 1 for w in g.adj[v] if w in index)
    for S in minimum_separators(g, inst.s, inst.t, inst.k):
        assert is_separator(inst, S)
        locate_tokens(cp, S)
