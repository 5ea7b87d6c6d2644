import math

import pytest
from hypothesis import given, settings, strategies as st

from steiner_ecc.errors import DisconnectedError, ParseError
from steiner_ecc.graph import (
    Graph,
    bfs_distances,
    biconnected_components,
    classify,
    cyclomatic_number,
    find_cycle,
    is_connected,
    parse_graph,
    serialize_graph,
)

from conftest import TWO_TRIANGLES, complete, cycle, path


def test_parse_path():
    g = parse_graph("3 2\n0 1\n1 2\n")
    assert g.n == 3 and g.m == 2
    assert g.edges == ((0, 1, 1.0), (1, 2, 1.0))


def test_parse_weighted_edge():
    g = parse_graph(b"2 1\n0 1 2.5\n")
    assert g.edges == ((0, 1, 2.5),)


def test_parse_comments_and_blank_lines():
    g = parse_graph("# header\n\n3 2\n# edge\n0 1\n  1 2 0.5  \n")
    assert g.edges == ((0, 1, 1.0), (1, 2, 0.5))


@pytest.mark.parametrize(
    "text, line",
    [
        ("2 1\n0 0\n", 2),  # self-loop
        ("3 2\n0 1\n1 0\n", 3),  # duplicate, reversed
        ("2 1\n0 1 -1\n", 2),  # negative weight
        ("2 1\n0 1 abc\n", 2),
        ("2 1\n0 1\n1 0\n", 3),  # more edges than declared
        ("3 2\n0 1\n", 3),  # fewer edges than declared
        ("3\n", 1),  # bad header
        ("2 2\n0 1\n1 5\n", 3),  # out of range: 3 distinct labels, n = 2
        ("2 1\n0 1 2 3\n", 2),
        ("2 1\n-1 1\n", 2),
        ("", 1),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.line == line


def test_parse_maps_sparse_labels():
    g = parse_graph("3 2\n10 20\n20 30 2\n")
    assert g.labels == (10, 20, 30)
    assert g.edges == ((0, 1, 1.0), (1, 2, 2.0))
    assert g.vertex_of_label(30) == 2
    assert serialize_graph(g) == "3 2\n10 20\n20 30 2.0\n"


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    ws = draw(st.lists(st.sampled_from([1.0, 0.5, 2.0, 3.25, 0.0]), min_size=len(chosen), max_size=len(chosen)))
    return Graph.from_edges(n, [(a, b, w) for (a, b), w in zip(chosen, ws)])


@given(graphs())
def test_serialize_parse_roundtrip(g):
    text = serialize_graph(g)
    h = parse_graph(text)
    assert serialize_graph(h) == text
    assert h.n == g.n and set(h.edges) == set(g.edges)


def test_bfs_distances():
    assert bfs_distances(path(3), 0) == [0, 1, 2]
    assert bfs_distances(cycle(3), 0) == [0, 1, 1]
    assert bfs_distances(Graph.from_edges(3, [(0, 1)]), 0) == [0, 1, math.inf]


@given(graphs())
def test_bfs_triangle_property(g):
    d = bfs_distances(g, 0)
    for u, v, _ in g.edges:
        assert abs(d[u] - d[v]) <= 1 or (d[u] == d[v] == math.inf)


def test_blocks_two_triangles():
    d = biconnected_components(TWO_TRIANGLES)
    assert len(d.blocks) == 2
    assert d.cut_vertices == {2}
    assert sorted(tuple(d.vertices(TWO_TRIANGLES, b)) for b in range(2)) == [(0, 1, 2), (2, 3, 4)]


def test_blocks_tree_and_k4():
    t = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    d = biconnected_components(t)
    assert len(d.blocks) == 3 and all(len(b) == 1 for b in d.blocks)
    assert d.cut_vertices == {1}
    d = biconnected_components(complete(4))
    assert len(d.blocks) == 1 and len(d.blocks[0]) == 6
    assert d.cut_vertices == set()


def _brute_cut_vertices(g):
    cuts = set()
    for x in range(g.n):
        rest = [e for e in g.edges if x not in e[:2]]
        others = [u for u in range(g.n) if u != x]
        if not others:
            continue
        idx = {u: i for i, u in enumerate(others)}
        h = Graph.from_edges(len(others), [(idx[a], idx[b]) for a, b, _ in rest])
        before = _components(g)
        if _components(h) > before - (1 if g.degree(x) == 0 else 0):
            cuts.add(x)
    return cuts


def _components(g):
    seen, c = set(), 0
    for s in range(g.n):
        if s in seen:
            continue
        c += 1
        d = bfs_distances(g, s)
        seen.update(u for u in range(g.n) if d[u] < math.inf)
    return c


@settings(max_examples=200)
@given(graphs())
def test_block_decomposition_invariants(g):
    d = biconnected_components(g)
    all_edges = [e for b in d.blocks for e in b]
    assert sorted(all_edges) == list(range(g.m))
    assert d.cut_vertices == _brute_cut_vertices(g)
    vsets = [set(d.vertices(g, b)) for b in range(len(d.blocks))]
    for i in range(len(vsets)):
        for j in range(i + 1, len(vsets)):
            shared = vsets[i] & vsets[j]
            assert len(shared) <= 1
            assert shared <= d.cut_vertices


def test_find_cycle_examples():
    c = find_cycle(cycle(3))
    assert len(c) == 3
    assert find_cycle(path(5)) is None
    # triangles {0,1,2} and {3,4,5} joined by bridge 2-3
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    c = find_cycle(g)
    assert len(c) == 3


def _is_simple_cycle(g, eids):
    deg = {}
    for e in eids:
        u, v, _ = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if not eids or any(x != 2 for x in deg.values()):
        return False
    h = g.keep_edges(eids)
    start = g.edges[eids[0]][0]
    d = bfs_distances(h, start)
    return all(d[u] < math.inf for u in deg)


@settings(max_examples=200)
@given(graphs(), st.booleans())
def test_find_cycle_iff_cyclic(g, reverse):
    c = find_cycle(g, reverse=reverse)
    forest = g.m == g.n - _components(g)
    assert (c is None) == forest
    if c is not None:
        assert _is_simple_cycle(g, c)
        assert find_cycle(g, reverse=reverse) == c  # deterministic


def test_find_cycle_respects_removed():
    g = cycle(4)
    assert find_cycle(g, removed={0}) is None


def test_classify():
    assert classify(path(5)) == ("tree", 0)
    assert classify(TWO_TRIANGLES) == ("block_graph", 2)
    assert classify(cycle(6)) == ("general", 1)
    with pytest.raises(DisconnectedError):
        classify(Graph.from_edges(3, [(0, 1)]))


@given(graphs())
def test_classify_consistent(g):
    if not is_connected(g):
        return
    kind, nu = classify(g)
    assert nu == cyclomatic_number(g) >= 0
    if kind == "block_graph":
        d = biconnected_components(g)
        for b in range(len(d.blocks)):
            s = len(d.vertices(g, b))
            assert len(d.blocks[b]) == s * (s - 1) // 2


def test_from_edges_rejects_invalid():
    for edges in ([(0, 0)], [(0, 1), (1, 0)], [(0, 1, -1.0)], [(0, 2)]):
        with pytest.raises(ValueError):
            Graph.from_edges(2, edges)
