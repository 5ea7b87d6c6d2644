"""Command-line front end.

Exit codes: 0 ok, 1 check failure, 2 parse error, 3 precondition violated,
4 cyclomatic-number cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import statistics
import sys
from typing import Optional

from . import bench as benchmod
from .all3 import all_ecc3
from .block import ecc_k_block
from .errors import CyclomaticCapExceeded, ParseError, PreconditionError
from .general import DEFAULT_NU_CAP, ecc_k_general
from .generate import generate, random_block_graph, random_nu_graph, random_tree
from .graph import Graph, classify, read_graph, serialize_graph
from .oracle import ecc3_pair_bruteforce, ecc_k_oracle
from .report import EccReport
from .tree import ecc_k_tree

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CAP = 0, 1, 2, 3, 4
CHECK_TOL = 1e-9
WEIGHTS = (0.5, 1.0, 2.0, 3.0)


def default_nu_cap() -> int:
    return int(os.environ.get("STEINER_ECC_NU_CAP", DEFAULT_NU_CAP))


def fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.9f}"


def resolve_method(g: Graph, method: str) -> str:
    if method != "auto":
        return method
    return {"tree": "tree", "block_graph": "block", "general": "general"}[classify(g).kind]


def run_method(g: Graph, v: int, k: int, method: str, nu_cap: int) -> EccReport:
    method = resolve_method(g, method)
    if method == "tree":
        return ecc_k_tree(g, v, k)
    if method == "block":
        return ecc_k_block(g, v, k)
    if method == "general":
        return ecc_k_general(g, v, k, nu_cap=nu_cap)
    if method == "oracle":
        return ecc_k_oracle(g, v, k)
    raise ValueError(method)


def _emit(obj: dict, out) -> None:
    print(json.dumps({"v": 1, **obj}), file=out)


# ---------------------------------------------------------------------------
# commands


def cmd_ecc(args, out) -> int:
    g = read_graph(args.graph)
    v = _vertex(g, args.vertex)
    rep = run_method(g, v, args.k, args.method, args.nu_cap)
    if args.format == "jsonl":
        _emit({"command": "ecc", **rep.to_dict(g)}, out)
    else:
        lab = g.labels
        print(fmt(rep.value), file=out)
        print("terminals: " + " ".join(str(lab[t]) for t in rep.terminals), file=out)
        print("tree: " + " ".join(f"{lab[a]}-{lab[b]}" for a, b in rep.tree_edges), file=out)
    return EXIT_OK


def cmd_all3(args, out) -> int:
    g = read_graph(args.graph)
    root = _vertex(g, args.root) if args.root is not None else 0
    for v, e in all_ecc3(g, root):
        if args.format == "jsonl":
            _emit({"command": "all3", "vertex": g.labels[v], "ecc3": e}, out)
        else:
            print(f"{g.labels[v]} {e:.9f}", file=out)
    return EXIT_OK


def avg_values(g: Graph, k: int, method: str, nu_cap: int) -> list[float]:
    if k == 3 and method in ("auto", "all3") and classify(g).kind == "tree":
        return [e for _, e in all_ecc3(g)]
    if method == "all3":
        raise PreconditionError("all3 requires k = 3 on a tree")
    return [run_method(g, v, k, method, nu_cap).value for v in range(g.n)]


def cmd_avg(args, out) -> int:
    g = read_graph(args.graph)
    vals = avg_values(g, args.k, args.method, args.nu_cap)
    mean = statistics.fmean(vals)
    if args.format == "jsonl":
        _emit({"command": "avg", "k": args.k, "mean": mean,
               "values": {str(g.labels[v]): x for v, x in enumerate(vals)}}, out)
    else:
        if args.per_vertex:
            for v, x in enumerate(vals):
                print(f"{g.labels[v]} {x:.9f}", file=out)
        print(f"{mean:.9f}", file=out)
    return EXIT_OK


def _check_instances(family: str, count: int, seed: int, nu: Optional[int], n_max: Optional[int]):
    """Yield (graph, method, ks) per instance; deterministic in ``seed``."""
    for i in range(count):
        rng = random.Random(seed * 1_000_003 + i)
        if family == "tree":
            n = rng.randint(1, n_max or 12)
            yield random_tree(n, rng), "tree", range(2, min(6, n) + 1)
        elif family == "weighted-tree":
            n = rng.randint(1, n_max or 12)
            yield random_tree(n, rng, WEIGHTS), "tree", range(2, min(6, n) + 1)
        elif family == "block":
            n = rng.randint(1, n_max or 12)
            yield random_block_graph(n, rng), "block", range(2, min(4, n) + 1)
        elif family == "general":
            n = rng.randint(3, n_max or 10)
            cap = n * (n - 1) // 2 - (n - 1)
            want = rng.randint(0, 3) if nu is None else nu
            yield random_nu_graph(n, min(want, cap), rng), "general", range(2, min(4, n) + 1)
        elif family == "all3":
            n = rng.randint(3, n_max or 200)
            yield random_tree(n, rng, WEIGHTS), "all3", (3,)
        else:
            raise PreconditionError(f"unknown family {family!r}")


def cmd_check(args, out) -> int:
    comparisons = 0
    for idx, (g, method, ks) in enumerate(
        _check_instances(args.family, args.count, args.seed, args.nu, args.n_max)
    ):
        if method == "all3":
            fast = [e for _, e in all_ecc3(g)]
            slow = ecc3_pair_bruteforce(g)
            pairs = [(v, 3, fast[v], slow[v]) for v in range(g.n)]
        else:
            pairs = []
            for k in ks:
                for v in range(g.n):
                    a = run_method(g, v, k, method, args.nu_cap).value
                    b = ecc_k_oracle(g, v, k).value
                    pairs.append((v, k, a, b))
        for v, k, a, b in pairs:
            comparisons += 1
            if abs(a - b) > CHECK_TOL:
                print(f"FAIL family={args.family} instance={idx} vertex={g.labels[v]} k={k} "
                      f"{method}={fmt(a)} oracle={fmt(b)}", file=out)
                print(serialize_graph(g), end="", file=out)
                return EXIT_CHECK
    print(f"PASS family={args.family} instances={args.count} comparisons={comparisons}", file=out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    weights = tuple(float(x) for x in args.weights.split(",")) if args.weights else None
    try:
        g = generate(args.family, args.n, args.seed, nu=args.nu or 0, weights=weights)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    text = serialize_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    records = []
    for n in args.n:
        if args.algo == "all3":
            records.append(benchmod.bench_all3(n, args.seed, args.repeats))
        elif args.algo == "tree":
            records.append(benchmod.bench_tree(n, args.k, args.seed, args.repeats))
        elif args.algo == "block":
            records.append(benchmod.bench_block(n, args.k, args.seed, args.repeats))
        else:
            for nu in args.nu or [1, 2, 3]:
                records.append(benchmod.bench_general(n, nu, args.k, args.seed, args.nu_cap))
    if args.format == "jsonl":
        for r in records:
            print(json.dumps(r.to_dict()), file=out)
    else:
        print(f"{'algorithm':<9} {'n':>8} {'m':>8} {'nu':>3} {'k':>2} {'seconds':>10} {'leaves':>7} answer", file=out)
        for r in records:
            leaves = "-" if r.leaves is None else str(r.leaves)
            print(f"{r.algorithm:<9} {r.n:>8} {r.m:>8} {r.nu:>3} {r.k:>2} {r.seconds:>10.4f} "
                  f"{leaves:>7} {fmt(r.answer)}", file=out)
    return EXIT_OK


def _vertex(g: Graph, label) -> int:
    try:
        return g.vertex_of_label(label)
    except KeyError as exc:
        raise PreconditionError(str(exc)) from None


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="steiner-ecc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    methods = ["auto", "tree", "block", "general", "oracle"]

    def common(sp):
        sp.add_argument("--format", choices=["text", "jsonl"], default="text")
        sp.add_argument("--nu-cap", type=int, default=default_nu_cap())

    sp = sub.add_parser("ecc", help="Steiner k-eccentricity of one vertex")
    sp.add_argument("graph")
    sp.add_argument("-v", "--vertex", type=int, required=True, help="vertex label")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--method", choices=methods, default="auto")
    common(sp)

    sp = sub.add_parser("all3", help="Steiner 3-eccentricity of every vertex of a tree")
    sp.add_argument("graph")
    sp.add_argument("--root", type=int, default=None, help="root label (default: first vertex)")
    common(sp)

    sp = sub.add_parser("avg", help="average Steiner k-eccentricity over all vertices")
    sp.add_argument("graph")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--method", choices=methods + ["all3"], default="auto")
    sp.add_argument("--per-vertex", action="store_true")
    common(sp)

    sp = sub.add_parser("check", help="randomized cross-check against the exact oracle")
    sp.add_argument("--family", choices=["tree", "weighted-tree", "block", "general", "all3"], required=True)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--nu", type=int, default=None)
    sp.add_argument("--n-max", type=int, default=None)
    common(sp)

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("--family", choices=["tree", "block", "nu-bounded"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--nu", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--weights", default=None, help="comma-separated weights to sample from")
    sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("bench", help="scaling benchmarks")
    sp.add_argument("--algo", choices=["all3", "tree", "block", "general"], required=True)
    sp.add_argument("--n", type=int, nargs="+", required=True)
    sp.add_argument("--nu", type=int, nargs="+", default=None)
    sp.add_argument("-k", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--repeats", type=int, default=5)
    common(sp)
    return p


COMMANDS = {
    "ecc": cmd_ecc, "all3": cmd_all3, "avg": cmd_avg,
    "check": cmd_check, "gen": cmd_gen, "bench": cmd_bench,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CyclomaticCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
