"""Steiner 3-eccentricity of every vertex of a weighted tree in linear time.

Each vertex keeps its three longest paths through distinct first-hop
neighbors, plus for each path the heaviest branch hanging off it strictly
below the vertex. A post-order pass fills these from the children; a
pre-order pass folds in the path leaving through the parent. Then

    ecc3(v) = path_weight[v][0] + max(path_weight[v][1], attached_weight[v][0]).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooSmallError
from .graph import Graph
from .tree import require_tree


@dataclass
class TopThreeState:
    path_weight: list[list[float]]
    path_index: list[list[int]]
    attached_weight: list[list[float]]
    parent: list[int]
    parent_weight: list[float]
    mark: list[int]
    debug: bool = False

    @classmethod
    def new(cls, n: int, debug: bool = False) -> "TopThreeState":
        return cls(
            [[0.0, 0.0, 0.0] for _ in range(n)],
            [[-1, -1, -1] for _ in range(n)],
            [[0.0, 0.0, 0.0] for _ in range(n)],
            [-1] * n,
            [0.0] * n,
            [-1] * n,
            debug,
        )

    def check(self, v: int) -> None:
        pw, pi = self.path_weight[v], self.path_index[v]
        assert pw[0] >= pw[1] >= pw[2], pw
        ids = [x for x in pi if x != -1]
        assert len(ids) == len(set(ids)), pi
        for i in range(3):
            if pi[i] == -1:
                assert pw[i] == 0.0 and self.attached_weight[v][i] == 0.0


def update(state: TopThreeState, v: int, u: int, new_weight: float, new_attached: float) -> None:
    """Insert ``(new_weight, u, new_attached)`` into v's top three, keeping order.

    Equal weights keep the earlier entry in the higher slot; anything below
    third place is dropped.
    """
    pw = state.path_weight[v]
    pi = state.path_index[v]
    aw = state.attached_weight[v]
    for i in range(3):
        if new_weight > pw[i] or pi[i] == -1:
            pw.insert(i, new_weight)
            pi.insert(i, u)
            aw.insert(i, new_attached)
            del pw[3], pi[3], aw[3]
            break
    if state.debug:
        state.check(v)


def _preorder(t: Graph, root: int, state: TopThreeState) -> list[int]:
    order = [root]
    parent = state.parent
    parent_weight = state.parent_weight
    stack = [root]
    while stack:
        v = stack.pop()
        for u, w, _ in reversed(t.adjacency[v]):
            if parent[u] == -1 and u != root:
                parent[u] = v
                parent_weight[u] = w
                order.append(u)
                stack.append(u)
    return order


def dfs_stage1(t: Graph, root: int, state: TopThreeState) -> list[int]:
    """Downward pass; returns the pre-order used (parents before children)."""
    require_tree(t)
    order = _preorder(t, root, state)
    pw, aw, parent = state.path_weight, state.attached_weight, state.parent
    for v in reversed(order):
        for u, w, _ in t.adjacency[v]:
            if parent[u] == v:
                update(state, v, u, w + pw[u][0], max(pw[u][1], aw[u][0]))
    return order


def dfs_stage2(t: Graph, root: int, state: TopThreeState, order: list[int] | None = None) -> None:
    """Upward pass: give every non-root vertex the path leaving through its parent."""
    if order is None:
        require_tree(t)
        order = [root]
        for v in order:
            order.extend(u for u, _, _ in t.adjacency[v] if state.parent[u] == v)
    pw, pi, aw = state.path_weight, state.path_index, state.attached_weight
    for v in order:
        state.mark[v] = 1
        u = state.parent[v]
        if u == -1:
            continue
        w = state.parent_weight[v]
        if pi[u][0] != v:
            up_path = w + pw[u][0]
            if pi[u][1] != v:
                up_attached = max(pw[u][1], aw[u][0])
            else:
                up_attached = max(pw[u][2], aw[u][0])
        else:
            up_path = w + pw[u][1]
            up_attached = max(pw[u][2], aw[u][1])
        update(state, v, u, up_path, up_attached)


def all_ecc3(t: Graph, root: int = 0, debug: bool = False) -> list[tuple[int, float]]:
    if t.n < 3:
        raise TooSmallError("need at least 3 vertices")
    state = TopThreeState.new(t.n, debug)
    order = dfs_stage1(t, root, state)
    dfs_stage2(t, root, state, order)
    pw, aw = state.path_weight, state.attached_weight
    return [(v, pw[v][0] + max(pw[v][1], aw[v][0])) for v in range(t.n)]
