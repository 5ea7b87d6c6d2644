"""Seeded random instances: trees, block graphs and graphs of bounded cyclomatic number."""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .graph import Graph


def _relabel(n: int, edges, rng: random.Random):
    perm = list(range(n))
    rng.shuffle(perm)
    out = []
    for e in edges:
        u, v = perm[e[0]], perm[e[1]]
        out.append((min(u, v), max(u, v), *e[2:]))
    out.sort()
    return out


def random_tree(n: int, rng: random.Random, weights: Optional[Sequence[float]] = None) -> Graph:
    """Random recursive tree with shuffled labels; weights drawn from ``weights`` if given."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = []
    for i in range(1, n):
        p = rng.randrange(i)
        edges.append((p, i, rng.choice(weights)) if weights else (p, i))
    return Graph.from_edges(n, _relabel(n, edges, rng))


def random_block_graph(n: int, rng: random.Random, max_clique: int = 5) -> Graph:
    """Tree of cliques: sizes uniform in 2..max_clique, each glued at a random existing vertex."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = []
    count = 1
    while count < n:
        size = min(rng.randint(2, max_clique), n - count + 1)
        clique = [rng.randrange(count)] + list(range(count, count + size - 1))
        count += size - 1
        for i, a in enumerate(clique):
            for b in clique[i + 1:]:
                edges.append((a, b))
    return Graph.from_edges(n, _relabel(n, edges, rng))


def random_nu_graph(
    n: int, nu: int, rng: random.Random, weights: Optional[Sequence[float]] = None
) -> Graph:
    """Random spanning tree plus exactly ``nu`` extra distinct edges."""
    if n < 1 or nu < 0:
        raise ValueError("need n >= 1 and nu >= 0")
    if nu > n * (n - 1) // 2 - (n - 1):
        raise ValueError(f"nu={nu} infeasible for n={n}")
    edges = []
    present = set()
    for i in range(1, n):
        p = rng.randrange(i)
        present.add((p, i))
        edges.append((p, i))
    extra = []
    if nu > (n * (n - 1) // 2 - (n - 1)) // 2:
        pool = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in present]
        extra = rng.sample(pool, nu)
    else:
        while len(extra) < nu:
            a, b = sorted(rng.sample(range(n), 2))
            if (a, b) not in present:
                present.add((a, b))
                extra.append((a, b))
    edges += extra
    if weights:
        edges = [(a, b, rng.choice(weights)) for a, b in edges]
    return Graph.from_edges(n, _relabel(n, edges, rng))


def generate(family: str, n: int, seed: int, nu: int = 0, weights=None) -> Graph:
    rng = random.Random(seed)
    if family == "tree":
        return random_tree(n, rng, weights)
    if family == "block":
        return random_block_graph(n, rng)
    if family == "nu-bounded":
        return random_nu_graph(n, nu, rng, weights)
    raise ValueError(f"unknown family {family!r}")
