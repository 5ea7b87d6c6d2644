"""Graph representation, edge-list I/O, traversals and structural decompositions.

Vertices are dense ids ``0..n-1``. Every edge has an id (its index in
``Graph.edges``) so algorithms can mask edges out without copying the graph.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable, Literal, NamedTuple, Optional, Sequence

from .errors import DisconnectedError, ParseError

Edge = tuple[int, int, float]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with nonnegative edge weights.

    ``edges`` holds ``(u, v, w)`` with ``u < v``; ``adjacency[u]`` holds
    ``(neighbor, weight, edge_id)`` sorted by neighbor id. ``labels`` maps
    dense ids back to the labels used in the source file.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[tuple[int, float, int], ...], ...] = field(repr=False)
    labels: tuple[int, ...] = field(repr=False)
    _index: dict = field(repr=False, compare=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence],
        labels: Optional[Sequence[int]] = None,
    ) -> "Graph":
        """Build a graph from ``(u, v)`` or ``(u, v, w)`` tuples; weights default to 1."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        norm: list[Edge] = []
        index: dict[tuple[int, int], int] = {}
        for e in edges:
            u, v = int(e[0]), int(e[1])
            w = float(e[2]) if len(e) > 2 else 1.0
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (w >= 0.0 and math.isfinite(w)):
                raise ValueError(f"invalid weight {w} on edge ({u}, {v})")
            if u > v:
                u, v = v, u
            if (u, v) in index:
                raise ValueError(f"parallel edge ({u}, {v})")
            index[(u, v)] = len(norm)
            norm.append((u, v, w))
        adj: list[list[tuple[int, float, int]]] = [[] for _ in range(n)]
        for eid, (u, v, w) in enumerate(norm):
            adj[u].append((v, w, eid))
            adj[v].append((u, w, eid))
        for lst in adj:
            lst.sort()
        if labels is None:
            labels = range(n)
        labels = tuple(int(x) for x in labels)
        if len(labels) != n:
            raise ValueError("labels must have length n")
        return cls(n, tuple(norm), tuple(tuple(a) for a in adj), labels, index)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def weight(self, u: int, v: int) -> float:
        eid = self.edge_id(u, v)
        if eid is None:
            raise KeyError((u, v))
        return self.edges[eid][2]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    @property
    def total_weight(self) -> float:
        return math.fsum(w for _, _, w in self.edges)

    def is_unit_weight(self) -> bool:
        return all(w == 1.0 for _, _, w in self.edges)

    def keep_edges(self, edge_ids: Iterable[int]) -> "Graph":
        """Spanning subgraph on the given edge ids (labels preserved)."""
        return Graph.from_edges(self.n, [self.edges[e] for e in sorted(edge_ids)], self.labels)

    def without_edges(self, removed: Iterable[int]) -> "Graph":
        removed = set(removed)
        return self.keep_edges(e for e in range(self.m) if e not in removed)

    def vertex_of_label(self, label: int) -> int:
        try:
            return self.labels.index(int(label))
        except ValueError:
            raise KeyError(f"no vertex labelled {label}") from None


# ---------------------------------------------------------------------------
# edge-list format


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list format: header ``n m``, then ``m`` lines ``u v [w]``.

    Labels are nonnegative integers. When all labels are below ``n`` they are
    used as ids directly; otherwise the distinct labels (exactly ``n`` of them)
    are mapped to dense ids in ascending label order.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header: Optional[tuple[int, int]] = None
    raw: list[tuple[int, int, int, float]] = []  # line, label_u, label_v, w
    last_line = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        last_line = lineno
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(lineno, "header must be 'n m'")
            n, m = (_parse_int(p, lineno, "header") for p in parts)
            header = (n, m)
            continue
        if len(raw) == header[1]:
            raise ParseError(lineno, f"more than the declared {header[1]} edges")
        if len(parts) not in (2, 3):
            raise ParseError(lineno, "edge line must be 'u v' or 'u v w'")
        u = _parse_int(parts[0], lineno, "vertex label")
        v = _parse_int(parts[1], lineno, "vertex label")
        w = 1.0
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise ParseError(lineno, f"bad weight {parts[2]!r}") from None
            if not math.isfinite(w):
                raise ParseError(lineno, f"non-finite weight {parts[2]!r}")
            if w < 0:
                raise ParseError(lineno, f"negative weight {parts[2]!r}")
        if u == v:
            raise ParseError(lineno, f"self-loop at {u}")
        raw.append((lineno, u, v, w))
    if header is None:
        raise ParseError(last_line + 1, "missing header")
    n, m = header
    if len(raw) < m:
        raise ParseError(last_line + 1, f"expected {m} edges, found {len(raw)}")

    if all(u < n and v < n for _, u, v, _ in raw):
        labels = list(range(n))
        ids = {i: i for i in range(n)}
    else:
        seen: set[int] = set()
        for lineno, u, v, _ in raw:
            seen.update((u, v))
            if len(seen) > n:
                raise ParseError(lineno, f"more than n={n} distinct vertex labels")
        if len(seen) != n:
            bad = next(ln for ln, u, v, _ in raw if u >= n or v >= n)
            raise ParseError(bad, f"label out of range for n={n}")
        labels = sorted(seen)
        ids = {lab: i for i, lab in enumerate(labels)}

    edges = []
    present: set[tuple[int, int]] = set()
    for lineno, u, v, w in raw:
        a, b = ids[u], ids[v]
        key = (a, b) if a < b else (b, a)
        if key in present:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        present.add(key)
        edges.append((a, b, w))
    return Graph.from_edges(n, edges, labels)


def _parse_int(tok: str, lineno: int, what: str) -> int:
    try:
        x = int(tok)
    except ValueError:
        raise ParseError(lineno, f"bad {what} {tok!r}") from None
    if x < 0:
        raise ParseError(lineno, f"negative {what} {tok!r}")
    return x


def read_graph(path) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list text; unit weights are omitted."""
    out = [f"{g.n} {g.m}"]
    for u, v, w in g.edges:
        lu, lv = g.labels[u], g.labels[v]
        out.append(f"{lu} {lv}" if w == 1.0 else f"{lu} {lv} {w!r}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# traversals


def bfs_distances(g: Graph, source: int, removed: frozenset | set = frozenset()) -> list[float]:
    """Hop distances from ``source``; unreachable vertices get ``math.inf``."""
    dist = [math.inf] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            d = dist[u] + 1
            for w, _, eid in g.adjacency[u]:
                if dist[w] == math.inf and eid not in removed:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def dijkstra(g: Graph, source: int) -> list[float]:
    """Weighted shortest-path distances from ``source``."""
    dist = [math.inf] * g.n
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for w, wt, _ in g.adjacency[u]:
            nd = d + wt
            if nd < dist[w]:
                dist[w] = nd
                heapq.heappush(heap, (nd, w))
    return dist


def is_connected(g: Graph, removed: frozenset | set = frozenset()) -> bool:
    if g.n == 0:
        return True
    return math.inf not in bfs_distances(g, 0, removed)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError("graph is not connected")


# ---------------------------------------------------------------------------
# blocks and cycles


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[list[int]]  # edge ids per biconnected component
    cut_vertices: frozenset[int]
    block_of_edge: dict[int, int]

    def vertices(self, g: Graph, b: int) -> list[int]:
        vs = set()
        for eid in self.blocks[b]:
            u, v, _ = g.edges[eid]
            vs.update((u, v))
        return sorted(vs)


def biconnected_components(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components, iterative."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    cuts: set[int] = set()
    estack: list[int] = []
    t = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = t
        t += 1
        root_children = 0
        stack = [[s, -1, 0]]
        while stack:
            frame = stack[-1]
            u, pe, i = frame
            adj = g.adjacency[u]
            if i < len(adj):
                frame[2] = i + 1
                w, _, eid = adj[i]
                if eid == pe:
                    continue
                if disc[w] == -1:
                    estack.append(eid)
                    disc[w] = low[w] = t
                    t += 1
                    if u == s:
                        root_children += 1
                    stack.append([w, eid, 0])
                elif disc[w] < disc[u]:
                    estack.append(eid)
                    if disc[w] < low[u]:
                        low[u] = disc[w]
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                block = []
                while True:
                    e = estack.pop()
                    block.append(e)
                    if e == pe:
                        break
                blocks.append(sorted(block))
                if p != s:
                    cuts.add(p)
        if root_children >= 2:
            cuts.add(s)
    block_of_edge = {e: b for b, blk in enumerate(blocks) for e in blk}
    return BlockDecomposition(blocks, frozenset(cuts), block_of_edge)


def find_cycle(
    g: Graph, removed: frozenset | set = frozenset(), reverse: bool = False
) -> Optional[list[int]]:
    """Edge ids of a simple cycle, or ``None`` if the graph is a forest.

    Depth-first from the lowest vertex id, neighbors in ascending id order
    (descending with ``reverse``); the cycle closed by the first back edge is
    returned, starting at the ancestor end.
    """
    n = g.n
    parent_edge = [-2] * n  # -2: unvisited
    parent = [-1] * n
    for s in range(n):
        if parent_edge[s] != -2:
            continue
        parent_edge[s] = -1
        stack = [(s, iter(reversed(g.adjacency[s]) if reverse else g.adjacency[s]))]
        while stack:
            u, it = stack[-1]
            for w, _, eid in it:
                if eid in removed or eid == parent_edge[u]:
                    continue
                if parent_edge[w] == -2:
                    parent_edge[w] = eid
                    parent[w] = u
                    stack.append((w, iter(reversed(g.adjacency[w]) if reverse else g.adjacency[w])))
                    break
                # first non-tree edge in an undirected DFS always points to an ancestor
                path = []
                x = u
                while x != w:
                    path.append(parent_edge[x])
                    x = parent[x]
                path.reverse()
                path.append(eid)
                return path
            else:
                stack.pop()
    return None


class GraphClass(NamedTuple):
    kind: Literal["tree", "block_graph", "general"]
    nu: int


def cyclomatic_number(g: Graph) -> int:
    return g.m - g.n + 1


def is_block_graph(g: Graph, decomposition: Optional[BlockDecomposition] = None) -> bool:
    d = decomposition or biconnected_components(g)
    for b, blk in enumerate(d.blocks):
        s = len(d.vertices(g, b))
        if len(blk) != s * (s - 1) // 2:
            return False
    return True


def classify(g: Graph) -> GraphClass:
    require_connected(g)
    nu = cyclomatic_number(g)
    if nu == 0:
        return GraphClass("tree", 0)
    if is_block_graph(g):
        return GraphClass("block_graph", nu)
    return GraphClass("general", nu)
