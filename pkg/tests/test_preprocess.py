import pytest

from corpus import mixed
from msrecon.canonical import canonical_paths
from msrecon.graph_core import Instance, is_separator, max_disjoint_paths, parse_instance, validate_instance
from msrecon.preprocess import contract_offpath, drop_inert_edges, preprocess_tj, reduce_degrees, remove_shared, trim_to_windows
from msrecon.solvers import oracle_bfs


def _cp(inst):
    return canonical_paths(inst, max_disjoint_paths(inst))


def test_trim_degenerate_window():
    inst = parse_instance("p msr 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1\nt 5\nA 3\nB 3\n")
    out = trim_to_windows(inst, _cp(inst))
    assert out.n == 3 and out.graph.m == 2


def test_trim_keeps_window_vertices(fix_a):
    out = trim_to_windows(fix_a, _cp(fix_a))
    assert out.graph == fix_a.graph


def test_contract_pendant_component():
    inst = parse_instance(
        "p msr 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 3 6\ne 4 6\ns 1\nt 5\nA 2\nB 4\n"
    )
    out = contract_offpath(inst, _cp(inst))
    assert out.n == 5


def test_reduce_degrees_drops_unprotected_degree_two():
    inst = parse_instance("p msr 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ns 1\nt 5\nA 2\nB 4\n")
    out = reduce_degrees(inst, _cp(inst))
    assert out.n == 4


def test_remove_shared(fix_a):
    inst = Instance(fix_a.graph, 1, 6, frozenset({2, 4}), frozenset({2, 5}))
    out, fixed = remove_shared(inst)
    assert fixed == {2} and out.k == 1 and out.n == 5


def test_a_equals_b_reduces_to_trivial(fix_b):
    ri = preprocess_tj(Instance(fix_b.graph, fix_b.s, fix_b.t, fix_b.A, fix_b.A))
    assert ri.k_reduced == 0 and ri.fixed_tokens == fix_b.A


def test_fix_b_unchanged(fix_b):
    ri = preprocess_tj(fix_b)
    assert ri.instance.graph == fix_b.graph
    assert all(ri.lift(v) == v for v in fix_b.graph.vertices())


@pytest.mark.parametrize("inst", mixed()[::6])
def test_reduced_structure_and_equivalence(inst):
    ri = preprocess_tj(inst)
    red = ri.instance
    validate_instance(red)
    on_path = set(ri.cp.position_of) | {red.s, red.t}
    assert on_path == set(red.graph.vertices())
    for v in red.graph.vertices():
        if v not in red.A | red.B | {red.s, red.t}:
            assert red.graph.degree(v) >= 3
    assert {ri.lift(v) for v in red.A} | ri.fixed_tokens == inst.A
    assert is_separator(inst, {ri.lift(v) for v in red.B} | ri.fixed_tokens)
    before, after = oracle_bfs(inst, "jump"), oracle_bfs(red, "jump")
    assert (before is None) == (after is None)
    if before is not None:
        assert len(before) == len(after)


def test_drop_inert_edges_keeps_live_crossings(fix_b):
    assert drop_inert_edges(fix_b, _cp(fix_b)).graph == fix_b.graph


def test_drop_inert_edges_between_opposed_paths():
    inst = parse_instance(
        "p msr 6 7\ne 1 2\ne 1 4\ne 2 5\ne 3 4\ne 3 5\ne 3 6\ne 5 6\ns 1\nt 6\nA 4 5\nB 2 3\n"
    )
    out = drop_inert_edges(inst, _cp(inst))
    assert out.graph.m == 6 and not out.graph.has_edge(3, 5)
