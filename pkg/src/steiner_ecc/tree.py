"""Greedy Steiner k-eccentricity of one vertex on a weighted tree.

Starting from the focal vertex, the subtree is grown k-1 times by the path
to the vertex farthest from it. On trees every optimal (k-1)-terminal tree
extends to an optimal k-terminal one, which is what makes greedy growth exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import NotATreeError
from .graph import Graph, is_connected
from .report import EccReport, check_k, check_vertex


def require_tree(t: Graph) -> None:
    if t.m != t.n - 1 or not is_connected(t):
        raise NotATreeError(f"graph with n={t.n}, m={t.m} is not a tree")


@dataclass
class GrowingTree:
    in_tree: list[bool]
    total_weight: float = 0.0
    terminals: list[int] = field(default_factory=list)
    edges: list[int] = field(default_factory=list)


def grow(t: Graph, v: int, k: int) -> Iterator[GrowingTree]:
    """Yield the growing tree after each of the k-1 extension steps.

    The same object is mutated and re-yielded; copy what you need to keep.
    """
    n = t.n
    state = GrowingTree([False] * n, 0.0, [v], [])
    state.in_tree[v] = True
    is_term = [False] * n
    is_term[v] = True
    in_tree = state.in_tree
    adjacency = t.adjacency
    dist = [0.0] * n  # distance to the current tree; 0 inside it
    via = [-1] * n
    prev = [-1] * n
    members = [v]
    for _ in range(k - 1):
        seen = in_tree[:]
        stack = members[:]
        while stack:
            u = stack.pop()
            du = dist[u]
            for w, wt, eid in adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    dist[w] = du + wt
                    via[w] = eid
                    prev[w] = u
                    stack.append(w)
        best = -1
        best_d = -1.0
        for x in range(n):
            if dist[x] > best_d and not is_term[x]:
                best, best_d = x, dist[x]
        is_term[best] = True
        state.terminals.append(best)
        x = best
        while not in_tree[x]:
            in_tree[x] = True
            dist[x] = 0.0
            members.append(x)
            state.edges.append(via[x])
            x = prev[x]
        state.total_weight += best_d
        yield state


def ecc_k_tree(t: Graph, v: int, k: int) -> EccReport:
    require_tree(t)
    check_vertex(t, v)
    check_k(t, k)
    state = GrowingTree([], 0.0, [v], [])
    for state in grow(t, v, k):
        pass
    edges = tuple(sorted(t.edges[e][:2] for e in state.edges))
    return EccReport(v, k, state.total_weight, tuple(sorted(state.terminals)), edges, "tree")


def tree_growth(t: Graph, v: int, k: int) -> list[frozenset[int]]:
    """Edge-id sets of the growing tree, one per step (step 0 is empty)."""
    require_tree(t)
    check_k(t, k)
    return [frozenset()] + [frozenset(s.edges) for s in grow(t, v, k)]
