"""Result type shared by the eccentricity algorithms, plus argument checks."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidK, PreconditionError
from .graph import Graph


@dataclass(frozen=True)
class EccReport:
    """Steiner k-eccentricity of ``vertex`` with one realizing terminal set and tree."""

    vertex: int
    k: int
    value: float
    terminals: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]
    method: str

    def to_dict(self, g: Graph) -> dict:
        lab = g.labels
        return {
            "vertex": lab[self.vertex],
            "k": self.k,
            "ecc": self.value,
            "terminals": [lab[t] for t in self.terminals],
            "tree": [[lab[u], lab[v]] for u, v in self.tree_edges],
            "method": self.method,
        }


def check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise PreconditionError(f"vertex {v} not in graph with n={g.n}")


def check_k(g: Graph, k: int) -> None:
    if not (1 <= k <= g.n):
        raise InvalidK(f"k={k} outside [1, {g.n}]")
