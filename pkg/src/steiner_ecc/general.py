"""Steiner k-eccentricity on general graphs by cycle-edge deletion.

The recursion picks a simple cycle, deletes each of its edges in turn and
recurses until a spanning tree remains; the tree greedy evaluates each leaf
and the minimum leaf value is returned. The leaf count grows like n^nu.

The minimum over spanning trees is always an upper bound on the true Steiner
k-eccentricity, and equals it for k <= 2 (a shortest-path tree from v is one
of the leaves). For k >= 3 it can be strictly larger: on a cycle C_n every
spanning tree is a path P_n, so the recursion returns n - 1, while the true
value is n - ceil(n / k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import CyclomaticCapExceeded, TooLargeError
from .graph import Graph, cyclomatic_number, find_cycle, require_connected
from .report import EccReport, check_k, check_vertex
from .tree import ecc_k_tree

DEFAULT_NU_CAP = 12
TRACE_MAX_N = 20


@dataclass
class RecursionState:
    current_opt: float = math.inf
    deleted_edges: list[int] = field(default_factory=list)
    leaves: int = 0
    nodes: int = 0
    best: Optional[EccReport] = None
    best_deleted: tuple[int, ...] = ()
    trace: Optional[list] = None


def _recurse(g: Graph, v: int, k: int, removed: set[int], state: RecursionState, reverse: bool) -> None:
    state.nodes += 1
    if g.m - len(removed) == g.n - 1:
        rep = ecc_k_tree(g.without_edges(removed), v, k)
        state.leaves += 1
        if state.trace is not None:
            state.trace.append((tuple(g.edges[e][:2] for e in state.deleted_edges), rep.value))
        if rep.value < state.current_opt:
            state.current_opt = rep.value
            state.best = rep
            state.best_deleted = tuple(state.deleted_edges)
        return
    for e in find_cycle(g, removed, reverse):
        removed.add(e)
        state.deleted_edges.append(e)
        _recurse(g, v, k, removed, state, reverse)
        state.deleted_edges.pop()
        removed.discard(e)


def ecc_k_general(
    g: Graph,
    v: int,
    k: int,
    nu_cap: int = DEFAULT_NU_CAP,
    state: Optional[RecursionState] = None,
    reverse: bool = False,
) -> EccReport:
    """Minimum over spanning trees of the tree k-eccentricity of ``v``.

    Pass a ``RecursionState`` to read leaf/node counts afterwards; ``reverse``
    flips the neighbor order used to pick cycles.
    """
    require_connected(g)
    check_vertex(g, v)
    check_k(g, k)
    nu = cyclomatic_number(g)
    if nu > nu_cap:
        raise CyclomaticCapExceeded(nu, nu_cap)
    if state is None:
        state = RecursionState()
    _recurse(g, v, k, set(), state, reverse)
    rep = state.best
    return EccReport(v, k, rep.value, rep.terminals, rep.tree_edges, "general")


def recursion_trace(
    g: Graph, v: int, k: int, nu_cap: int = DEFAULT_NU_CAP
) -> list[tuple[tuple[tuple[int, int], ...], float]]:
    """One ``(deleted edges, leaf value)`` record per spanning tree reached."""
    if g.n > TRACE_MAX_N:
        raise TooLargeError(f"recursion trace limited to n <= {TRACE_MAX_N}")
    state = RecursionState(trace=[])
    ecc_k_general(g, v, k, nu_cap, state)
    return state.trace
