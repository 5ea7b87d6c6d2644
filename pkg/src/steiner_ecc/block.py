"""Steiner k-eccentricity on block graphs by reduction to a spanning tree.

For a focal vertex v, each block (clique) keeps only the edges incident to
its vertex nearest to v. The resulting spanning tree T(v, G) has the same
Steiner k-eccentricity at v as the block graph, so the tree greedy applies.
"""

from __future__ import annotations

from typing import Optional

from .errors import NotBlockGraphError, WeightedUnsupportedError
from .graph import (
    BlockDecomposition,
    Graph,
    bfs_distances,
    biconnected_components,
    is_block_graph,
    require_connected,
)
from .report import EccReport, check_k, check_vertex
from .tree import ecc_k_tree


def require_block_graph(g: Graph) -> BlockDecomposition:
    require_connected(g)
    d = biconnected_components(g)
    if not is_block_graph(g, d):
        raise NotBlockGraphError("some biconnected component is not a clique")
    return d


def near_vertices(g: Graph, v: int, d: Optional[BlockDecomposition] = None) -> dict[int, int]:
    """Map each block index to its vertex closest to ``v`` in hops."""
    check_vertex(g, v)
    if d is None:
        d = require_block_graph(g)
    elif not is_block_graph(g, d):
        raise NotBlockGraphError("some biconnected component is not a clique")
    dist = bfs_distances(g, v)
    near = {}
    for b in range(len(d.blocks)):
        near[b] = min(d.vertices(g, b), key=lambda x: (dist[x], x))
    return near


def build_tvg(g: Graph, v: int) -> Graph:
    return _tvg(g, v, require_block_graph(g))


def _tvg(g: Graph, v: int, d: BlockDecomposition) -> Graph:
    check_vertex(g, v)
    dist = bfs_distances(g, v)
    near = [min(d.vertices(g, b), key=lambda x: (dist[x], x)) for b in range(len(d.blocks))]
    keep = []
    for eid, (a, b, _) in enumerate(g.edges):
        x = near[d.block_of_edge[eid]]
        if a == x or b == x:
            keep.append(eid)
    return g.keep_edges(keep)


def build_tvg_dfs(g: Graph, v: int) -> Graph:
    """Depth-first construction of T(v, G), visiting marks set once.

    When a vertex u is first reached from x, every edge from u to another
    neighbor of x lies in the block shared by x and u and is dropped.
    """
    require_block_graph(g)
    check_vertex(g, v)
    alive = [True] * g.m
    visited = [False] * g.n
    visited[v] = True
    stack = [v]
    while stack:
        x = stack.pop()
        for u, _, eid in g.adjacency[x]:
            if visited[u] or not alive[eid]:
                continue
            visited[u] = True
            for w, _, uw in g.adjacency[u]:
                if w != x and alive[uw] and g.has_edge(w, x):
                    alive[uw] = False
            stack.append(u)
    return g.keep_edges(e for e in range(g.m) if alive[e])


def ecc_k_block(g: Graph, v: int, k: int) -> EccReport:
    d = require_block_graph(g)
    check_vertex(g, v)
    check_k(g, k)
    if not g.is_unit_weight():
        raise WeightedUnsupportedError("block-graph reduction requires unit weights")
    rep = ecc_k_tree(_tvg(g, v, d), v, k)
    return EccReport(rep.vertex, k, rep.value, rep.terminals, rep.tree_edges, "block")
