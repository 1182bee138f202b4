"""Command-line front end: generate instances, run algorithms, verify trees,
and sweep benchmark grids into CSV tables."""

from __future__ import annotations

import argparse
import json
import statistics
import sys

from . import dimacs
from .generators import GenSpec, generate, parse_spec
from .gh import gomory_hu, gusfield
from .graph import bfs_reorder
from .ocdriver import oc_gomory_hu
from .oracle import all_pairs_min_cut, check_cut_tree

ALGORITHMS = ("ghh", "ghr", "gus", "oc")

VERIFY_LIMIT = 40  # pairwise oracle cost grows fast beyond this


def run_algorithm(name, graph):
    if name == "ghh":
        return gomory_hu(graph, "heaviest")
    if name == "ghr":
        return gomory_hu(graph, "reuse")
    if name == "gus":
        return gusfield(graph)
    if name == "oc":
        return oc_gomory_hu(graph)
    raise ValueError(f"unknown algorithm {name!r}")


def _load_graph(path):
    with open(path) as fh:
        return dimacs.read_graph(fh)


def cmd_gen(args):
    spec = parse_spec(args.spec)
    g = generate(spec)
    if args.reorder:
        g, _ = bfs_reorder(g)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        dimacs.write_graph(g, out)
    finally:
        if args.output:
            out.close()
    return 0


def cmd_run(args):
    g = _load_graph(args.input)
    if not g.is_connected():
        print("error: input graph is not connected", file=sys.stderr)
        return 2
    tree, metrics = run_algorithm(args.alg, g)
    if args.tree:
        with open(args.tree, "w") as fh:
            tree.emit(fh)
    else:
        tree.emit(sys.stdout)
    if args.alg == "oc":
        print(f"c ordered_cuts_calls {metrics.ordered_cuts_calls}", file=sys.stderr)
    row = metrics_row(args.input, g, args.alg, metrics)
    print(format_row(header_fields(), row, args.format), file=sys.stderr)
    return 0


def cmd_verify(args):
    g = _load_graph(args.input)
    if not g.is_connected():
        print("error: input graph is not connected", file=sys.stderr)
        return 2
    if g.n > args.limit:
        print(
            f"error: refusing to verify n={g.n} > {args.limit} "
            "(override with --limit)",
            file=sys.stderr,
        )
        return 2
    algs = args.algs.split(",") if args.algs else list(ALGORITHMS)
    for name in algs:
        if name not in ALGORITHMS:
            print(f"error: unknown algorithm {name!r}", file=sys.stderr)
            return 2
    truth = all_pairs_min_cut(g, mode="maxflow")
    mismatches = []
    for name in algs:
        tree, _ = run_algorithm(name, g)
        for u, v, expected, got in check_cut_tree(tree, truth):
            mismatches.append(
                {"alg": name, "u": u + 1, "v": v + 1, "expected": expected, "got": got}
            )
    print(json.dumps({"mismatches": mismatches}))
    return 0 if not mismatches else 1


def header_fields():
    return [
        "instance",
        "n",
        "m",
        "algorithm",
        "size_h_over_g_nodes",
        "size_h_over_g_edges",
        "size_mf_over_h_nodes",
        "size_mf_over_h_edges",
        "size_mf_over_g_nodes",
        "size_mf_over_g_edges",
        "diameter",
        "t_total",
        "t_mf",
    ]


def metrics_row(instance, graph, alg, metrics):
    hg = metrics.size_h.ratio(metrics.size_g)
    mh = metrics.size_mf.ratio(metrics.size_h)
    mg = metrics.size_mf.ratio(metrics.size_g)
    return [
        instance,
        graph.n,
        graph.m,
        alg,
        round(hg[0], 4),
        round(hg[1], 4),
        round(mh[0], 4),
        round(mh[1], 4),
        round(mg[0], 4),
        round(mg[1], 4),
        str(metrics.tree_diameter),
        round(metrics.t_total, 4),
        round(metrics.t_mf, 4),
    ]


def format_row(fields, row, fmt):
    sep = "\t" if fmt == "tsv" else ","
    assert len(fields) == len(row)
    return sep.join(str(x) for x in row)


def cmd_bench(args):
    specs = [parse_spec(s) for s in args.spec]
    algs = args.algs.split(",") if args.algs else list(ALGORITHMS)
    for a in algs:
        if a not in ALGORITHMS:
            print(f"error: unknown algorithm {a!r}", file=sys.stderr)
            return 2
    sep = "\t" if args.format == "tsv" else ","
    out = sys.stdout
    out.write(sep.join(header_fields()) + "\n")
    for spec in specs:
        for alg in algs:
            rows = []
            diameters = []
            truth_checked = False
            for rep in range(args.seeds):
                g = generate(
                    GenSpec(spec.family, spec.n, seed=spec.seed + rep, params=spec.params)
                )
                if args.reorder:
                    g, _ = bfs_reorder(g)
                tree, metrics = run_algorithm(alg, g)
                if g.n <= VERIFY_LIMIT:
                    truth = all_pairs_min_cut(g, mode="maxflow")
                    bad = check_cut_tree(tree, truth)
                    if bad:
                        print(
                            f"error: verification failed for {spec.family} "
                            f"seed {spec.seed + rep} alg {alg}: {bad[:3]}",
                            file=sys.stderr,
                        )
                        return 1
                    truth_checked = True
                rows.append(metrics_row(spec_name(spec), g, alg, metrics))
                diameters.append(metrics.tree_diameter)
            avg = average_rows(rows, diameters)
            out.write(sep.join(str(x) for x in avg) + "\n")
            if args.verbose and truth_checked:
                print(f"# verified {spec_name(spec)} x {alg}", file=sys.stderr)
    return 0


def spec_name(spec):
    """Comma-free instance label so it stays a single CSV cell."""
    extras = ";".join(f"{k}={v}" for k, v in sorted(spec.params.items()))
    base = f"{spec.family}:n={spec.n}"
    return f"{base};{extras}" if extras else base


def average_rows(rows, diameters):
    """Mean of the numeric cells; diameter becomes a range when runs differ."""
    first = rows[0]
    out = first[:4]
    for col in range(4, 10):
        out.append(round(statistics.mean(r[col] for r in rows), 4))
    lo, hi = min(diameters), max(diameters)
    out.append(str(lo) if lo == hi else f"{lo}-{hi}")
    for col in (11, 12):
        out.append(round(statistics.mean(r[col] for r in rows), 4))
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cuttree",
        description="Cut-tree construction, instance generation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an instance")
    p_gen.add_argument("spec", help="e.g. cycle:n=4196,w=1..1000,seed=7")
    p_gen.add_argument("-o", "--output")
    p_gen.add_argument("--reorder", action="store_true", help="BFS-renumber nodes")
    p_gen.set_defaults(func=cmd_gen)

    p_run = sub.add_parser("run", help="run one algorithm on one instance")
    p_run.add_argument("input")
    p_run.add_argument("--alg", choices=ALGORITHMS, required=True)
    p_run.add_argument("--tree", help="write tree lines here instead of stdout")
    p_run.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p_run.set_defaults(func=cmd_run)

    p_ver = sub.add_parser("verify", help="cross-check trees against the oracle")
    p_ver.add_argument("input")
    p_ver.add_argument("--algs", help="comma list; default all")
    p_ver.add_argument("--limit", type=int, default=VERIFY_LIMIT)
    p_ver.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="sweep a family x algorithm grid")
    p_bench.add_argument("spec", nargs="+")
    p_bench.add_argument("--algs", help="comma list; default all")
    p_bench.add_argument("--seeds", type=int, default=5)
    p_bench.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p_bench.add_argument("--reorder", action="store_true")
    p_bench.add_argument("-v", "--verbose", action="store_true")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
