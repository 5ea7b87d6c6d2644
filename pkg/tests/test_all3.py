import random

import pytest
from hypothesis import given, settings, strategies as st

from steiner_ecc.all3 import TopThreeState, all_ecc3, dfs_stage1, dfs_stage2, update
from steiner_ecc.errors import NotATreeError, TooSmallError
from steiner_ecc.generate import random_tree
from steiner_ecc.graph import Graph
from steiner_ecc.oracle import ecc3_pair_bruteforce
from steiner_ecc.tree import ecc_k_tree

from conftest import cycle, star

WEIGHTS = (0.5, 1.0, 2.0, 3.0)
X, Y, Z, U, W = 10, 11, 12, 13, 14


def _state_with(pw, pi, aw):
    s = TopThreeState.new(1)
    s.path_weight[0], s.path_index[0], s.attached_weight[0] = list(pw), list(pi), list(aw)
    return s


def test_update_inserts_in_middle():
    s = _state_with((5, 3, 0), (X, Y, -1), (1, 0, 0))
    update(s, 0, Z, 4, 2)
    assert s.path_weight[0] == [5, 4, 3]
    assert s.path_index[0] == [X, Z, Y]
    assert s.attached_weight[0] == [1, 2, 0]


def test_update_into_empty():
    s = TopThreeState.new(1)
    update(s, 0, U, 7, 0)
    assert (s.path_weight[0], s.path_index[0], s.attached_weight[0]) == ([7, 0, 0], [U, -1, -1], [0, 0, 0])


def test_update_below_third_is_dropped():
    s = _state_with((5, 4, 3), (X, Y, Z), (0, 0, 0))
    update(s, 0, W, 2, 9)
    assert (s.path_weight[0], s.path_index[0], s.attached_weight[0]) == ([5, 4, 3], [X, Y, Z], [0, 0, 0])


def test_update_tie_keeps_earlier_first():
    s = TopThreeState.new(1)
    update(s, 0, X, 3, 0)
    update(s, 0, Y, 3, 1)
    assert s.path_index[0][:2] == [X, Y]


@settings(max_examples=200)
@given(st.lists(st.tuples(st.sampled_from([0.0, 0.5, 1.0, 2.0, 3.0]), st.floats(0, 5)), max_size=8))
def test_update_keeps_top_three_sorted(items):
    s = TopThreeState.new(1, debug=True)
    for i, (w, a) in enumerate(items):
        update(s, 0, i, w, a)
    expect = sorted((-w, i) for i, (w, _) in enumerate(items))[:3]
    assert s.path_weight[0][: len(expect)] == [-w for w, _ in expect]
    assert s.path_index[0][: len(expect)] == [i for _, i in expect]
    assert s.attached_weight[0][: len(expect)] == [items[i][1] for _, i in expect]


# a=0, b=1, c=2 with weights a-b 2, b-c 3
PATH_ABC = Graph.from_edges(3, [(0, 1, 2.0), (1, 2, 3.0)])
# center 0; leaf 1 weight 4, leaf 2 weight 2, leaf 3 weight 1
STAR421 = star([4.0, 2.0, 1.0])


def test_stage1_path():
    s = TopThreeState.new(3)
    dfs_stage1(PATH_ABC, 0, s)
    assert s.path_weight == [[5, 0, 0], [3, 0, 0], [0, 0, 0]]
    assert s.parent == [-1, 0, 1]


def test_stage1_star_center():
    s = TopThreeState.new(4)
    dfs_stage1(STAR421, 0, s)
    assert s.path_weight[0] == [4, 2, 1]
    assert s.attached_weight[0] == [0, 0, 0]


def test_stage1_star_from_light_leaf():
    s = TopThreeState.new(4)
    dfs_stage1(STAR421, 3, s)
    assert s.path_weight[3] == [5, 0, 0]
    assert s.attached_weight[3] == [2, 0, 0]


def test_stage2_path():
    s = TopThreeState.new(3)
    order = dfs_stage1(PATH_ABC, 0, s)
    root_before = [list(x) for x in (s.path_weight[0], s.path_index[0], s.attached_weight[0])]
    dfs_stage2(PATH_ABC, 0, s, order)
    assert s.path_weight[2] == [5, 0, 0]
    assert s.path_weight[1] == [3, 2, 0]
    assert [s.path_weight[0], s.path_index[0], s.attached_weight[0]] == root_before
    assert s.mark == [1, 1, 1]


def test_stage2_star_light_leaf():
    s = TopThreeState.new(4)
    dfs_stage1(STAR421, 0, s)
    dfs_stage2(STAR421, 0, s)
    assert s.path_weight[3] == [5, 0, 0]
    assert s.attached_weight[3] == [2, 0, 0]


def test_all_ecc3_examples():
    assert [e for _, e in all_ecc3(PATH_ABC)] == [5, 5, 5]
    out = dict(all_ecc3(STAR421))
    assert out[0] == 6 and out[3] == 7
    assert out == dict(enumerate(ecc3_pair_bruteforce(STAR421)))
    k13 = dict(all_ecc3(star([1.0, 1.0, 1.0])))
    assert k13 == {0: 2, 1: 3, 2: 3, 3: 3}


def test_errors():
    with pytest.raises(TooSmallError):
        all_ecc3(Graph.from_edges(2, [(0, 1)]))
    with pytest.raises(NotATreeError):
        all_ecc3(cycle(4))


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 60), st.integers(0, 2**32), st.booleans())
def test_matches_pair_bruteforce_and_tree_greedy(n, seed, weighted):
    t = random_tree(n, random.Random(seed), WEIGHTS if weighted else None)
    got = [e for _, e in all_ecc3(t, debug=True)]
    assert got == pytest.approx(ecc3_pair_bruteforce(t), abs=1e-9)
    assert got == pytest.approx([ecc_k_tree(t, v, 3).value for v in range(n)], abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 30), st.integers(0, 2**32))
def test_root_independence(n, seed):
    t = random_tree(n, random.Random(seed), WEIGHTS)
    base = all_ecc3(t, 0)
    for r in range(n):
        assert all_ecc3(t, r) == pytest.approx(base, abs=1e-9)


def test_zero_weights_and_high_degree():
    t = Graph.from_edges(7, [(0, i, w) for i, w in zip(range(1, 7), (0.0, 0.0, 1.0, 1.0, 2.0, 0.0))])
    assert [e for _, e in all_ecc3(t)] == pytest.approx(ecc3_pair_bruteforce(t))


def test_deep_path_no_recursion_limit():
    n = 50_000
    t = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    out = all_ecc3(t)
    assert out[0][1] == n - 1 and out[n // 2][1] == n - 1
