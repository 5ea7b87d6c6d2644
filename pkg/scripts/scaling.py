#!/usr/bin/env python3
"""Runtime scaling of the linear-time algorithms and leaf growth of the general recursion.

Usage:
    python scripts/scaling.py [--out results.jsonl] [--quick]

Writes one JSON record per measurement and prints successive doubling ratios.
"""

import argparse
import json
import random
import statistics

from steiner_ecc.all3 import all_ecc3
from steiner_ecc.bench import BENCH_WEIGHTS, bench_general, scaling_ratios
from steiner_ecc.block import ecc_k_block
from steiner_ecc.generate import random_block_graph, random_tree
from steiner_ecc.tree import ecc_k_tree


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=None)
    ap.add_argument("--quick", action="store_true", help="smaller sizes")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    scale = 10 if args.quick else 1
    records = []

    grids = {
        "all3": ([100_000 // scale, 200_000 // scale, 400_000 // scale],
                 lambda n: (lambda t: lambda: all_ecc3(t))(random_tree(n, random.Random(n), BENCH_WEIGHTS))),
        "tree k=4": ([10_000, 20_000, 40_000],
                     lambda n: (lambda t: lambda: ecc_k_tree(t, 0, 4))(random_tree(n, random.Random(n)))),
        "block k=4": ([10_000, 20_000, 40_000],
                      lambda n: (lambda g: lambda: ecc_k_block(g, 0, 4))(random_block_graph(n, random.Random(n)))),
    }
    for name, (sizes, make) in grids.items():
        ratios = scaling_ratios(make, sizes, args.repeats)
        print(f"{name:<10} sizes {sizes} doubling ratios " + " ".join(f"{r:.2f}" for r in ratios))
        records.append({"v": 1, "experiment": name, "sizes": sizes, "ratios": ratios})

    for n in (8, 12, 16):
        med = {}
        for nu in (1, 2, 3, 4):
            leaves = [bench_general(n, nu, 3, seed).leaves for seed in range(20)]
            med[nu] = statistics.median(leaves)
        print(f"general n={n:<3} median leaves by nu: " + ", ".join(f"{nu}:{x:g}" for nu, x in med.items()))
        records.append({"v": 1, "experiment": "general leaves", "n": n, "median_leaves": med})

    if args.out:
        with open(args.out, "w") as fh:
            for r in records:
                fh.write(json.dumps(r) + "\n")


if __name__ == "__main__":
    main()
