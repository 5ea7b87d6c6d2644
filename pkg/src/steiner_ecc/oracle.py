"""Exact minimum Steiner trees and brute-force Steiner k-eccentricity.

``steiner_tree_exact`` is the Dreyfus-Wagner dynamic program over terminal
subsets (merge two sub-trees at a vertex, then grow along shortest paths).
``ecc_k_oracle`` maximizes it over every k-set containing the focal vertex;
for graphs with at most ``TABLE_MAX_N`` vertices the Steiner distance of
every small vertex subset is filled in one compiled pass instead.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numba import njit

from .errors import TooLargeError
from .graph import Graph, dijkstra, require_connected
from .report import EccReport, check_k, check_vertex

MAX_TERMINALS = 16
TABLE_MAX_N = 16
SPANNING_TREE_MAX_N = 10


@dataclass(frozen=True)
class SteinerResult:
    weight: float
    edges: frozenset[int]  # edge ids of one minimum tree

    def edge_pairs(self, g: Graph) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(g.edges[e][:2] for e in self.edges))


def steiner_tree_exact(g: Graph, terminals) -> SteinerResult:
    terms = sorted(set(terminals))
    if not terms:
        raise ValueError("terminal set is empty")
    for t in terms:
        check_vertex(g, t)
    if len(terms) > MAX_TERMINALS:
        raise TooLargeError(f"{len(terms)} terminals exceeds the oracle cap {MAX_TERMINALS}")
    require_connected(g)
    k = len(terms)
    if k == 1:
        return SteinerResult(0.0, frozenset())

    n = g.n
    full = (1 << k) - 1
    inf = math.inf
    dp = [[inf] * n for _ in range(full + 1)]
    # back[mask][v]: None (leaf), ("m", sub) merge, ("e", u, eid) grown from u
    back: list[list] = [[None] * n for _ in range(full + 1)]
    for i, t in enumerate(terms):
        dp[1 << i][t] = 0.0

    for mask in range(1, full + 1):
        row = dp[mask]
        brow = back[mask]
        low = mask & -mask
        if mask != low:
            sub = (mask - 1) & mask
            while sub:
                if sub & low:
                    a, b = dp[sub], dp[mask ^ sub]
                    for v in range(n):
                        val = a[v] + b[v]
                        if val < row[v]:
                            row[v] = val
                            brow[v] = ("m", sub)
                sub = (sub - 1) & mask
        heap = [(row[v], v) for v in range(n) if row[v] < inf]
        heapq.heapify(heap)
        while heap:
            d, u = heapq.heappop(heap)
            if d > row[u]:
                continue
            for w, wt, eid in g.adjacency[u]:
                nd = d + wt
                if nd < row[w]:
                    row[w] = nd
                    brow[w] = ("e", u, eid)
                    heapq.heappush(heap, (nd, w))

    used: set[int] = set()
    todo = [(full, terms[0])]
    while todo:
        mask, v = todo.pop()
        b = back[mask][v]
        if b is None:
            continue
        if b[0] == "m":
            todo.append((b[1], v))
            todo.append((mask ^ b[1], v))
        else:
            used.add(b[2])
            todo.append((mask, b[1]))
    return SteinerResult(dp[full][terms[0]], _prune(g, used, terms))


def _prune(g: Graph, edge_ids: set[int], terms: list[int]) -> frozenset[int]:
    """Drop cycles (possible only through zero-weight edges) and non-terminal leaves."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    keep = set()
    for eid in sorted(edge_ids, key=lambda e: (g.edges[e][2], e)):
        u, v, _ = g.edges[eid]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            keep.add(eid)
    tset = set(terms)
    inc: dict[int, set[int]] = {}
    for eid in keep:
        u, v, _ = g.edges[eid]
        inc.setdefault(u, set()).add(eid)
        inc.setdefault(v, set()).add(eid)
    leaves = [x for x, es in inc.items() if len(es) == 1 and x not in tset]
    while leaves:
        x = leaves.pop()
        if len(inc[x]) != 1:
            continue
        (eid,) = inc[x]
        keep.discard(eid)
        u, v, _ = g.edges[eid]
        y = v if u == x else u
        inc[x].clear()
        inc[y].discard(eid)
        if len(inc[y]) == 1 and y not in tset:
            leaves.append(y)
    return frozenset(keep)


# ---------------------------------------------------------------------------
# all-subsets table


@njit(cache=True)
def _subset_steiner_table(dist, kmax):
    n = dist.shape[0]
    size = 1 << n
    inf = np.inf
    dp = np.full((size, n), inf)
    st = np.full(size, inf)
    pc = np.zeros(size, dtype=np.int64)
    for mask in range(1, size):
        pc[mask] = pc[mask >> 1] + (mask & 1)
    for i in range(n):
        for v in range(n):
            dp[1 << i, v] = dist[i, v]
        st[1 << i] = 0.0
    tmp = np.empty(n)
    for mask in range(1, size):
        if pc[mask] < 2 or pc[mask] > kmax:
            continue
        low = mask & -mask
        for v in range(n):
            tmp[v] = inf
        sub = (mask - 1) & mask
        while sub > 0:
            if sub & low:
                other = mask ^ sub
                for v in range(n):
                    val = dp[sub, v] + dp[other, v]
                    if val < tmp[v]:
                        tmp[v] = val
            sub = (sub - 1) & mask
        for v in range(n):
            best = tmp[v]
            for u in range(n):
                c = tmp[u] + dist[u, v]
                if c < best:
                    best = c
            dp[mask, v] = best
        lowbit = 0
        while not (mask >> lowbit) & 1:
            lowbit += 1
        st[mask] = dp[mask, lowbit]
    return st, pc


class SubsetTable:
    """Steiner distance of every vertex subset of size at most ``kmax``."""

    def __init__(self, g: Graph, kmax: int):
        if g.n > TABLE_MAX_N:
            raise TooLargeError(f"subset table needs n <= {TABLE_MAX_N}")
        require_connected(g)
        self.n = g.n
        self.kmax = kmax
        dist = all_pairs_distances(g)
        self.steiner, self.popcount = _subset_steiner_table(dist, kmax)
        self._ids = np.arange(1 << g.n, dtype=np.int64)

    def weight(self, subset) -> float:
        mask = 0
        for x in subset:
            mask |= 1 << x
        return float(self.steiner[mask])

    def ecc(self, v: int, k: int) -> tuple[float, tuple[int, ...]]:
        """Maximum Steiner distance over k-sets containing ``v``; lexicographically smallest maximizer."""
        if k > self.kmax:
            raise ValueError(f"table built for k <= {self.kmax}")
        sel = self._ids[(self.popcount == k) & ((self._ids >> v) & 1 == 1)]
        vals = self.steiner[sel]
        best = vals.max()
        winners = sel[vals == best]
        sets = [tuple(i for i in range(self.n) if (int(mk) >> i) & 1) for mk in winners]
        return float(best), min(sets)


@lru_cache(maxsize=16)
def subset_table(g: Graph, kmax: int) -> SubsetTable:
    return SubsetTable(g, kmax)


def ecc_k_oracle(g: Graph, v: int, k: int) -> EccReport:
    check_vertex(g, v)
    check_k(g, k)
    require_connected(g)
    if k == 1:
        return EccReport(v, 1, 0.0, (v,), (), "oracle")
    if g.n <= TABLE_MAX_N:
        value, terms = subset_table(g, k).ecc(v, k)
        tree = steiner_tree_exact(g, terms)
    else:
        if k > MAX_TERMINALS:
            raise TooLargeError(f"k={k} exceeds the oracle cap {MAX_TERMINALS}")
        value, terms, tree = -1.0, None, None
        others = [u for u in range(g.n) if u != v]
        for rest in itertools.combinations(others, k - 1):
            s = tuple(sorted((v, *rest)))
            res = steiner_tree_exact(g, s)
            if res.weight > value or (res.weight == value and s < terms):
                value, terms, tree = res.weight, s, res
    return EccReport(v, k, value, terms, tree.edge_pairs(g), "oracle")


def spanning_trees(g: Graph):
    """Yield the edge-id sets of all spanning trees (by choosing which edges to drop)."""
    require_connected(g)
    nu = g.m - g.n + 1
    for dropped in itertools.combinations(range(g.m), nu):
        drop = set(dropped)
        keep = [e for e in range(g.m) if e not in drop]
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in keep:
            u, w, _ = g.edges[e]
            ru, rw = find(u), find(w)
            if ru == rw:
                break
            parent[ru] = rw
        else:
            yield keep


def ecc_k_all_spanning_trees(g: Graph, v: int, k: int) -> float:
    """Minimum over every spanning tree T of the tree k-eccentricity of ``v`` in T."""
    from .tree import ecc_k_tree

    if g.n > SPANNING_TREE_MAX_N:
        raise TooLargeError(f"spanning-tree enumeration limited to n <= {SPANNING_TREE_MAX_N}")
    check_vertex(g, v)
    check_k(g, k)
    return min(ecc_k_tree(g.keep_edges(keep), v, k).value for keep in spanning_trees(g))


def all_pairs_distances(g: Graph) -> np.ndarray:
    return np.array([dijkstra(g, s) for s in range(g.n)], dtype=np.float64).reshape(g.n, g.n)


def ecc3_pair_bruteforce(t: Graph) -> list[float]:
    """Steiner 3-eccentricity of every tree vertex by maximizing over all pairs.

    On a tree the Steiner tree of {v, x, y} weighs half the sum of the three
    pairwise distances.
    """
    from .tree import require_tree

    require_tree(t)
    d = all_pairs_distances(t)
    out = []
    for v in range(t.n):
        dv = d[v]
        out.append(float((dv[:, None] + dv[None, :] + d).max() / 2.0))
    return out
