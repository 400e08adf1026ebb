import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import mixed
from msrecon.canonical import canonical_paths
from msrecon.errors import NotForward, StateSpaceExceeded, TooLarge
from msrecon.generators import gen_random_instance, gen_random_layered
from msrecon.graph_core import Instance, max_disjoint_paths
from msrecon.preprocess import preprocess_tj
from msrecon.solvers import (
    Move,
    oracle_bfs,
    pathdecomp_from_solution,
    shortest_jumps_reduced,
    solve_tj_feasible,
    solve_tj_shortest,
    solve_ts_shortest,
)
from msrecon.verify import verify_sequence
from oracles import audit_pathdecomp


def _len(seq):
    return None if seq is None else len(seq)


@pytest.mark.parametrize(
    "name, slide, jump",
    [("A", 2, 2), ("B", 4, 3), ("C", 6, 5), ("DEAD", None, None), ("PATH", 1, 1)],
)
def test_fixture_lengths(fixtures, name, slide, jump):
    inst = fixtures[name]
    assert _len(solve_ts_shortest(inst)) == slide
    assert _len(solve_tj_shortest(inst)) == jump
    assert _len(oracle_bfs(inst, "slide")) == slide
    assert _len(oracle_bfs(inst, "jump")) == jump
    greedy = solve_tj_feasible(inst)
    assert (greedy is None) == (jump is None)
    if greedy is not None:
        assert len(greedy) >= jump


def test_a_equals_b_is_empty(fix_b):
    inst = Instance(fix_b.graph, fix_b.s, fix_b.t, fix_b.A, fix_b.A)
    assert _len(solve_ts_shortest(inst)) == 0
    assert _len(solve_tj_shortest(inst)) == 0


def test_moves_use_original_ids_and_token_index(fix_b):
    seq = solve_tj_shortest(fix_b)
    assert all(1 <= m.source <= fix_b.n and 1 <= m.target <= fix_b.n for m in seq.moves)
    assert {m.path for m in seq.moves} <= {0, 1}


def test_state_cap(fix_c):
    with pytest.raises(StateSpaceExceeded):
        solve_tj_shortest(fix_c, max_states=5)


def test_oracle_guard():
    inst = gen_random_layered(0, 5, 20, 0.0)
    with pytest.raises(TooLarge):
        oracle_bfs(inst, "jump")


def test_oracle_forbidden_endpoint(fix_a):
    assert oracle_bfs(fix_a, "jump", forbidden=[2]) is None


@pytest.mark.parametrize("inst", mixed()[::4])
def test_solvers_match_oracle(inst):
    tj, ts = solve_tj_shortest(inst), solve_ts_shortest(inst)
    assert _len(tj) == _len(oracle_bfs(inst, "jump"))
    assert _len(ts) == _len(oracle_bfs(inst, "slide"))
    greedy = solve_tj_feasible(inst)
    assert (greedy is None) == (tj is None)
    for seq in (tj, ts, greedy):
        if seq is not None:
            assert verify_sequence(inst, seq).accepted
    if ts is not None:
        cp = canonical_paths(inst, max_disjoint_paths(inst))
        assert len(ts) == sum(abs(a - b) for a, b in zip(cp.a, cp.b))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(7, 12))
def test_shortest_never_beaten(seed, n):
    inst = gen_random_instance(seed, n)
    assert _len(solve_tj_shortest(inst)) == _len(oracle_bfs(inst, "jump"))


def test_pathdecomp_fix_a(fix_a):
    ri = preprocess_tj(fix_a)
    pd = pathdecomp_from_solution(ri, shortest_jumps_reduced(ri))
    assert len(pd.bags) == 5
    assert pd.width == 2
    assert audit_pathdecomp(pd.bags, ri.instance.graph, ri.instance.A, ri.instance.B, 2) == []


def test_pathdecomp_single_path(single_path):
    ri = preprocess_tj(single_path)
    pd = pathdecomp_from_solution(ri, shortest_jumps_reduced(ri))
    lifted = [{ri.lift(v) for v in bag} for bag in pd.bags]
    assert lifted == [{2}, {2, 3}, {3}]


def test_pathdecomp_fix_b_covers_crossing(fix_b):
    ri = preprocess_tj(fix_b)
    pd = pathdecomp_from_solution(ri, shortest_jumps_reduced(ri))
    assert pd.width <= 2
    assert any({4, 5} <= {ri.lift(v) for v in bag} for bag in pd.bags)


def test_pathdecomp_rejects_backward(fix_a):
    ri = preprocess_tj(fix_a)
    cp = ri.cp
    back = [Move(0, cp.vertex(0, 2), cp.vertex(0, 3)), Move(0, cp.vertex(0, 3), cp.vertex(0, 2))]
    with pytest.raises(NotForward):
        pathdecomp_from_solution(ri, back)


@pytest.mark.parametrize("inst", mixed()[::7])
def test_pathdecomp_audit(inst):
    ri = preprocess_tj(inst)
    moves = shortest_jumps_reduced(ri)
    if moves is None:
        return
    red = ri.instance
    pd = pathdecomp_from_solution(ri, moves)
    assert audit_pathdecomp(pd.bags, red.graph, red.A, red.B, red.k) == []


OPPOSED_TEXT = """\
p msr 6 7
e 1 2
e 1 4
e 2 5
e 3 4
e 3 5
e 3 6
e 5 6
s 1
t 6
A 4 5
B 2 3
"""


def test_pathdecomp_opposed_directions():
    # tokens travel s-ward on one path and t-ward on the other; edge 3-5 is inert
    from msrecon.graph_core import parse_instance

    inst = parse_instance(OPPOSED_TEXT)
    ri = preprocess_tj(inst)
    red = ri.instance
    assert not any({ri.lift(u), ri.lift(v)} == {3, 5} for u, v in red.graph.edges())
    pd = pathdecomp_from_solution(ri, shortest_jumps_reduced(ri))
    assert audit_pathdecomp(pd.bags, red.graph, red.A, red.B, red.k) == []
    assert len(solve_tj_shortest(inst)) == len(oracle_bfs(inst, "jump"))
