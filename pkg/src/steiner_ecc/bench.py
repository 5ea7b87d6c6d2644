"""Timing and recursion-size measurements behind the ``bench`` command."""

from __future__ import annotations

import gc
import random
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Callable, Optional

from .all3 import all_ecc3
from .block import ecc_k_block
from .general import RecursionState, ecc_k_general
from .generate import random_block_graph, random_nu_graph, random_tree
from .tree import ecc_k_tree

BENCH_WEIGHTS = (0.5, 1.0, 2.0, 3.0)


@dataclass
class BenchRecord:
    algorithm: str
    n: int
    m: int
    nu: int
    k: int
    seconds: float
    leaves: Optional[int]
    answer: float

    def to_dict(self) -> dict:
        return {"v": 1, **asdict(self)}


def timed(fn: Callable, repeats: int = 5):
    """Median wall time of ``fn()`` over ``repeats`` runs, with GC paused like ``timeit``."""
    times = []
    result = None
    enabled = gc.isenabled()
    try:
        for _ in range(repeats):
            gc.collect()
            gc.disable()
            t0 = time.perf_counter()
            result = fn()
            times.append(time.perf_counter() - t0)
            if enabled:
                gc.enable()
    finally:
        if enabled:
            gc.enable()
    return statistics.median(times), result


def bench_all3(n: int, seed: int, repeats: int = 5) -> BenchRecord:
    t = random_tree(n, random.Random(seed), BENCH_WEIGHTS)
    secs, out = timed(lambda: all_ecc3(t), repeats)
    return BenchRecord("all3", n, t.m, 0, 3, secs, None, sum(e for _, e in out) / n)


def bench_tree(n: int, k: int, seed: int, repeats: int = 5) -> BenchRecord:
    t = random_tree(n, random.Random(seed))
    secs, rep = timed(lambda: ecc_k_tree(t, 0, k), repeats)
    return BenchRecord("tree", n, t.m, 0, k, secs, None, rep.value)


def bench_block(n: int, k: int, seed: int, repeats: int = 5) -> BenchRecord:
    g = random_block_graph(n, random.Random(seed))
    secs, rep = timed(lambda: ecc_k_block(g, 0, k), repeats)
    return BenchRecord("block", n, g.m, g.m - n + 1, k, secs, None, rep.value)


def bench_general(n: int, nu: int, k: int, seed: int, nu_cap: int = 12) -> BenchRecord:
    g = random_nu_graph(n, nu, random.Random(seed))
    state = RecursionState()
    t0 = time.perf_counter()
    rep = ecc_k_general(g, 0, k, nu_cap=nu_cap, state=state)
    secs = time.perf_counter() - t0
    return BenchRecord("general", n, g.m, nu, k, secs, state.leaves, rep.value)


def leaf_count(n: int, nu: int, k: int, seed: int) -> int:
    return bench_general(n, nu, k, seed).leaves


def interleaved_medians(fns: dict, repeats: int = 5) -> dict:
    """Median wall time per key, running the callables round-robin so drift hits all sizes alike."""
    times = {key: [] for key in fns}
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(repeats):
            for key, fn in fns.items():
                t0 = time.perf_counter()
                fn()
                times[key].append(time.perf_counter() - t0)
    finally:
        if enabled:
            gc.enable()
    return {key: statistics.median(ts) for key, ts in times.items()}


def scaling_ratios(make_fn: Callable[[int], Callable], sizes, repeats: int = 5) -> list[float]:
    """Successive wall-time ratios t(sizes[i+1]) / t(sizes[i])."""
    med = interleaved_medians({n: make_fn(n) for n in sizes}, repeats)
    return [med[b] / med[a] for a, b in zip(sizes, sizes[1:])]
