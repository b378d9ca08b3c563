"""Batch command line: generate, analyze, check, export, and benchmark
trapezoid diagrams.

Diagram file format: first non-comment line holds n, then one line per
trapezoid with the four corners "a b c d"; '#' starts a comment.  All
records print as stable key=value pairs.  Exit codes: 0 success, 1 parse
or validation failure, 2 internal cross-check disagreement.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from contextlib import nullcontext

from . import connectivity, diagram, oracle, structure

ORACLE_MAX_N = 500


class CliError(Exception):
    def __init__(self, message, exit_code=1):
        super().__init__(message)
        self.exit_code = exit_code


def read_diagram_file(path: str, rank_normalize: bool = False) -> diagram.TrapezoidDiagram:
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    tokens = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    if not tokens:
        raise CliError(f"{path}: empty diagram file")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise CliError(f"{path}: {exc}")
    n = values[0]
    if n < 1 or len(values) != 1 + 4 * n:
        raise CliError(
            f"{path}: expected {4 * max(n, 0)} corner values for n = {n}, "
            f"found {len(values) - 1}"
        )
    quads = [values[1 + 4 * k : 5 + 4 * k] for k in range(n)]
    a, b, c, d = (list(col) for col in zip(*quads))
    try:
        if rank_normalize:
            return diagram.normalize(a, b, c, d)
        return diagram.validate(a, b, c, d)
    except diagram.DiagramError as exc:
        report = "\n".join(f"  {v}" for v in exc.violations)
        raise CliError(f"{path}: invalid diagram\n{report}")


def write_diagram_file(dg: diagram.TrapezoidDiagram, out) -> None:
    out.write(f"{dg.n}\n")
    for i in dg.vertices():
        out.write(f"{dg.a[i]} {dg.b[i]} {dg.c[i]} {dg.d[i]}\n")


def _out_ctx(path, **kwargs):
    """Context manager for an output target; never closes stdout."""
    if path in (None, "-"):
        return nullcontext(sys.stdout)
    return open(path, "w", **kwargs)


def cmd_gen(args) -> int:
    if args.n < 1:
        raise CliError("n must be >= 1")
    dg = diagram.random_diagram(args.n, args.seed)
    try:
        with _out_ctx(args.out) as handle:
            write_diagram_file(dg, handle)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}")
    return 0


def _fmt_vertices(vertices) -> str:
    return ",".join(map(str, vertices)) if vertices else "-"


def cmd_kappa(args) -> int:
    dg = read_diagram_file(args.path, args.normalize)
    if args.algorithm == "oracle" and dg.n > ORACLE_MAX_N:
        raise CliError(
            f"oracle algorithm is limited to n <= {ORACLE_MAX_N} "
            f"(got n = {dg.n}); use fast or quadratic"
        )
    start = time.perf_counter_ns()
    if args.algorithm == "fast":
        result = connectivity.kappa_fast(dg, witness=args.witness)
    elif args.algorithm == "quadratic":
        result = connectivity.kappa_quadratic(dg, witness=args.witness)
    else:
        g = diagram.intersection_graph(dg)
        if args.witness:
            cut = oracle.min_vertex_cut(g)
            kappa = g.n - 1 if cut is None else len(cut)
            result = connectivity.ConnectivityResult(kappa, cut, None)
        else:
            result = connectivity.ConnectivityResult(oracle.kappa_bruteforce(g))
    elapsed = time.perf_counter_ns() - start
    record = f"kappa={result.kappa} algorithm={args.algorithm} elapsed_ns={elapsed}"
    if args.witness:
        record += f" witness={_fmt_vertices(result.witness)}"
    print(record)
    return 0


def cmd_check(args) -> int:
    dg = read_diagram_file(args.path, args.normalize)
    g = diagram.intersection_graph(dg)
    if args.property == "bipartite":
        verdict = structure.is_bipartite(g)
        if isinstance(verdict, structure.Bipartition):
            zero, one = verdict.parts()
            print(f"bipartite=true part0={_fmt_vertices(zero)} part1={_fmt_vertices(one)}")
        else:
            print(f"bipartite=false odd_cycle={_fmt_vertices(verdict.vertices)}")
    elif args.property == "triangle":
        tri = structure.has_triangle(g)
        print(f"triangle={_fmt_vertices(tri) if tri else 'none'}")
    else:
        verdict = structure.is_caterpillar(g)
        if isinstance(verdict, structure.CaterpillarDecomposition):
            pendants = ";".join(
                f"{v}:{_fmt_vertices(leaves)}"
                for v, leaves in zip(verdict.spine, verdict.pendants)
                if leaves
            )
            print(
                f"caterpillar=true spine={_fmt_vertices(verdict.spine)} "
                f"pendants={pendants or '-'}"
            )
        else:
            print(f"caterpillar=false reason={verdict.reason!r} detail={verdict.detail!r}")
    return 0


def cmd_export(args) -> int:
    dg = read_diagram_file(args.path, args.normalize)
    g = diagram.intersection_graph(dg)
    with _out_ctx(args.out) as handle:
        if args.format == "edgelist":
            handle.write(f"{g.n} {g.m}\n")
            for u, v in g.edges():
                handle.write(f"{u} {v}\n")
        else:
            handle.write("graph g {\n")
            for v in g.vertices():
                handle.write(f"  {v};\n")
            for u, v in g.edges():
                handle.write(f"  {u} -- {v};\n")
            handle.write("}\n")
    return 0


def _bench_oracle(dg):
    g = diagram.intersection_graph(dg)
    return connectivity.ConnectivityResult(oracle.kappa_bruteforce(g))


_BENCH_ALGORITHMS = {
    "fast": connectivity.kappa_fast,
    "quadratic": connectivity.kappa_quadratic,
    "oracle": _bench_oracle,
}


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    algorithms = [tok for tok in args.algorithms.split(",") if tok]
    for name in algorithms:
        if name not in _BENCH_ALGORITHMS:
            raise CliError(f"unknown algorithm {name!r}")
    if "oracle" in algorithms and max(sizes) > ORACLE_MAX_N:
        raise CliError(f"oracle algorithm is limited to n <= {ORACLE_MAX_N}")
    try:
        from . import _kernels

        _kernels.warmup()  # keep JIT compilation out of the timings
    except ImportError:
        pass
    rows = []
    disagreements = []
    for n in sizes:
        for seed in range(args.seeds_per_size):
            dg = diagram.random_diagram(n, seed)
            kappas = {}
            for name in algorithms:
                start = time.perf_counter_ns()
                result = _BENCH_ALGORITHMS[name](dg)
                elapsed = time.perf_counter_ns() - start
                rows.append(
                    {"n": n, "seed": seed, "algorithm": name,
                     "elapsed_ns": elapsed, "kappa": result.kappa}
                )
                kappas[name] = result.kappa
            if len(set(kappas.values())) > 1:
                disagreements.append(f"n={n} seed={seed}: {kappas}")
    with _out_ctx(args.csv_out, newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=["n", "seed", "algorithm", "elapsed_ns", "kappa"])
        writer.writeheader()
        writer.writerows(rows)
    if disagreements:
        for line in disagreements:
            print(f"cross-check disagreement: {line}", file=sys.stderr)
        raise CliError("algorithms disagree on kappa", exit_code=2)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trapgraph",
        description="Trapezoid-graph toolkit: connectivity, structure checks, benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a random diagram")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("kappa", help="vertex connectivity of a diagram file")
    p.add_argument("path")
    p.add_argument("--algorithm", choices=["fast", "quadratic", "oracle"], default="fast")
    p.add_argument("--witness", action="store_true", help="also print a minimum vertex cut")
    p.add_argument("--normalize", action="store_true",
                   help="accept arbitrary distinct integer coordinates and rank-normalize")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("check", help="structural property of the intersection graph")
    p.add_argument("path")
    p.add_argument("--property", choices=["bipartite", "triangle", "caterpillar"],
                   required=True)
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export", help="emit the intersection graph")
    p.add_argument("path")
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.add_argument("--out", default="-")
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("bench", help="time algorithms on random diagrams, CSV out")
    p.add_argument("--sizes", required=True, help="comma-separated n values")
    p.add_argument("--seeds-per-size", type=int, default=3)
    p.add_argument("--algorithms", default="fast,quadratic")
    p.add_argument("--csv-out", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); exit quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1


if __name__ == "__main__":
    sys.exit(main())
