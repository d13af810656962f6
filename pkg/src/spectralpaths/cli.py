"""Command-line front door.

Subcommands: generate, spectral-path, spread-path, quotient, sweep,
perturb, rw-report.  Graphs travel as TSV files (see graphio); report
subcommands write a JSON (and CSV where rows exist) next to a PNG
figure when given an output base path.  Exit codes: 0 success, 1 domain
error (bad parameters, disconnected input, solver failure), 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import eigen, experiments, families, graphio, spread
from .errors import SpectralPathsError
from .paths import grounded_eigenfunction, spectral_path, symmetric_spectral_path
from .quotient import quotient_graph, refine_partition


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _epsilon_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad epsilon list: {text!r}") from exc


def _out_base(path: str) -> str:
    for ext in (".csv", ".json", ".png", ".tsv"):
        if path.endswith(ext):
            return path[: -len(ext)]
    return path


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _family_params(args) -> families.FamilyParams:
    return families.FamilyParams(
        family=args.family,
        ell=args.ell,
        k=args.k,
        t=args.t,
        d=args.d,
    )


def _load(path: str):
    return graphio.read_graph(path)


def _cmd_generate(args) -> int:
    graph = families.generate(_family_params(args))
    if args.format == "dot":
        _emit(graphio.to_dot(graph), args.out)
    else:
        _emit(graphio.format_graph(graph), args.out)
    return 0


def _path_output(graph, rec, args) -> None:
    labels = rec.as_labels(graph)
    if args.format == "json":
        payload = {
            "path": labels,
            "length": rec.length,
            "distance": rec.endpoint_distance,
            "stretch": None if rec.stretch is None else str(rec.stretch),
            "stretch_float": None if rec.stretch is None else float(rec.stretch),
            "tie": rec.had_tie,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "dot":
        _emit(graphio.to_dot(graph, highlight=rec.vertices), args.out)
    else:
        lines = [
            "path: " + " ".join(labels),
            f"length: {rec.length}",
            f"distance: {rec.endpoint_distance}",
            f"stretch: {rec.stretch}",
            f"tie: {'true' if rec.had_tie else 'false'}",
        ]
        _emit("\n".join(lines) + "\n", args.out)


def _cmd_spectral_path(args) -> int:
    graph = _load(args.graph)
    j = graph.index_of(args.src)
    i = graph.index_of(args.dst)
    if args.symmetric:
        rec = symmetric_spectral_path(graph, i, j)
    else:
        f = grounded_eigenfunction(graph, i, tol=args.tol, compute_gap=False)
        rec = spectral_path(graph, i, j, f=f)
    _path_output(graph, rec, args)
    return 0


def _cmd_spread_path(args) -> int:
    graph = _load(args.graph)
    j = graph.index_of(args.src)
    i = graph.index_of(args.dst)
    rec = spread.spread_path(graph, i, j)
    _path_output(graph, rec, args)
    return 0


def _cmd_quotient(args) -> int:
    if args.graph is not None and args.family is not None:
        raise SpectralPathsError("give either a graph file or family parameters, not both")
    if args.graph is not None:
        if args.limit:
            raise SpectralPathsError("--limit needs an analytic family quotient")
        graph = _load(args.graph)
        i = graph.index_of(args.ground)
        q = quotient_graph(graph, i, refine_partition(graph, i))
        out_graph = q.graph
    elif args.family is not None:
        q = families.analytic_quotient(_family_params(args))
        out_graph = families.limit_graph(q) if args.limit else q.graph
    else:
        raise SpectralPathsError("quotient needs a graph file or family parameters")
    if args.format == "dot":
        _emit(graphio.to_dot(out_graph), args.out)
    elif args.format == "json":
        payload = {
            "special_cell": q.special_cell,
            "labels": [out_graph.label_of(c) for c in range(out_graph.n)],
            "vertex_weights": [float(w) for w in out_graph.vertex_weight],
            "edges": [
                [a, b, float(w)] for (a, b), w in sorted(out_graph.edges.items())
            ],
            "cells": [[int(u) for u in cell] for cell in q.cells],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(graphio.format_graph(out_graph), args.out)
    return 0


def _cmd_sweep(args) -> int:
    from . import plots

    if args.family == "block-path":
        if args.k is None or args.d is None:
            raise SpectralPathsError("block-path sweep needs --k and --d")
        report = experiments.block_path_report(args.ell, args.k, args.d, tol=args.tol)
        line = (
            f"block-path ell={args.ell} k={args.k} d={args.d}: "
            f"diameter={report.diameter} (formula {report.diameter_formula}), "
            f"spectral_len={report.spectral_len} (claimed {report.claimed_len}), "
            f"stretch_vs_diameter={float(report.stretch_vs_diameter):.4f} "
            f"(claimed {float(report.claimed_stretch_vs_diameter):.4f})"
        )
        if args.out is None:
            sys.stdout.write(experiments.block_report_json(report))
        else:
            base = _out_base(args.out)
            _emit(experiments.block_report_json(report), base + ".json")
            row = experiments.SweepRow(
                params=report.params,
                spectral_len=report.spectral_len,
                hop_dist=report.endpoint_distance,
                stretch=report.stretch,
                tie_flag=report.tie_flag,
                eigen_gap=float("nan"),
                wall_time=report.wall_time,
            )
            result = experiments.SweepResult(
                family="block-path",
                ell=args.ell,
                t=None,
                rows=[row],
                limit_len=report.spectral_len,
                stabilization_k=None,
                tol=args.tol,
            )
            _emit(experiments.sweep_csv(result), base + ".csv")
            plots.plot_block_report(report, base + ".png")
            line += f"  [wrote {base}.json, {base}.csv, {base}.png]"
        print(line)
        return 0

    start = args.start_k if args.start_k else (1 if args.family == "weighted-cycle" else 4)
    k_list = experiments.doubling_schedule(start, args.max_k)
    if args.family == "weighted-cycle":
        result = experiments.sweep_weighted_cycle(args.ell, k_list, tol=args.tol)
    else:
        if args.t is None:
            raise SpectralPathsError("double-broom sweep needs --t")
        result = experiments.sweep_double_broom(args.ell, args.t, k_list, tol=args.tol)
    if args.out is None:
        sys.stdout.write(experiments.sweep_csv(result))
    else:
        base = _out_base(args.out)
        _emit(experiments.sweep_csv(result), base + ".csv")
        _emit(experiments.sweep_json(result), base + ".json")
        plots.plot_sweep(result, base + ".png")
        print(f"[wrote {base}.csv, {base}.json, {base}.png]")
    print(
        f"{result.family} ell={result.ell}: limit length {result.limit_len}, "
        + (
            f"stabilizes at k={result.stabilization_k}"
            if result.stabilization_k is not None
            else "no stabilization within the schedule"
        )
    )
    return 0


def _cmd_perturb(args) -> int:
    from . import plots

    graph = _load(args.graph)
    i = graph.index_of(args.ground)
    start = graph.index_of(args.src)
    forced = graph.index_of(args.forced)
    report = experiments.perturbation_trial(
        graph,
        i,
        (start, forced),
        epsilon_list=args.epsilons,
        trials=args.trials,
        seed=args.seed,
        tol=args.tol,
    )
    if args.out is None:
        sys.stdout.write(experiments.perturbation_json(report, graph))
    else:
        base = _out_base(args.out)
        _emit(experiments.perturbation_json(report, graph), base + ".json")
        plots.plot_perturbation(report, base + ".png")
        print(f"[wrote {base}.json, {base}.png]")
    if report.best_epsilon is None:
        print("no listed epsilon preserved the path in every trial")
    else:
        print(f"fully preserved up to epsilon={report.best_epsilon:g}")
    return 0


def _cmd_rw_report(args) -> int:
    from . import plots

    graph = _load(args.graph)
    report = experiments.rw_stretch_report(graph)
    if args.out is None:
        sys.stdout.write(experiments.rw_report_json(report, graph))
    else:
        base = _out_base(args.out)
        _emit(experiments.rw_report_json(report, graph), base + ".json")
        plots.plot_rw_report(report, base + ".png")
        print(f"[wrote {base}.json, {base}.png]")
    print(
        f"lambda={report.lam:.6f} Delta={report.Delta} alpha={report.alpha:.6f} "
        f"min_L_D={report.min_L_D:.6f} diameter={report.diameter} "
        f"violations={len(report.violations)}"
    )
    return 0


def _add_family_args(p: argparse.ArgumentParser, *, family_required: bool) -> None:
    p.add_argument(
        "--family",
        choices=families.FAMILIES,
        required=family_required,
        help="graph family",
    )
    p.add_argument("--ell", type=int, required=family_required, help="path length parameter")
    p.add_argument("--k", type=int, default=None, help="width (parallel path count)")
    p.add_argument("--t", type=_fraction, default=None,
                   help="pendant rate (double-broom); rationals like 5/3 stay exact")
    p.add_argument("--d", type=int, default=None, help="block count (block-path)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectralpaths",
        description="Spectral paths on weighted graphs: eigenfunction descent, "
        "symmetry quotients, counterexample families, experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family instance as TSV")
    _add_family_args(p, family_required=True)
    p.add_argument("-o", "--out", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("tsv", "dot"), default="tsv")
    p.set_defaults(func=_cmd_generate)

    for name, fn, blurb in (
        ("spectral-path", _cmd_spectral_path, "greedy eigenfunction descent path"),
        ("spread-path", _cmd_spread_path, "greedy spread-function descent path (shortest)"),
    ):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("-g", "--graph", required=True, help="TSV graph file")
        p.add_argument("--from", dest="src", required=True, help="start vertex (label or index)")
        p.add_argument("--to", dest="dst", required=True, help="target vertex: the grounded end")
        p.add_argument("--tol", type=float, default=eigen.DEFAULT_TOL,
                       help=f"eigensolver tolerance (default {eigen.DEFAULT_TOL:g})")
        if name == "spectral-path":
            p.add_argument("--symmetric", action="store_true",
                           help="take the shorter of the two directed spectral paths")
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.add_argument("-o", "--out", default=None, help="output file (default stdout)")
        p.set_defaults(func=fn)

    p = sub.add_parser("quotient", help="equitable-partition quotient of a graph or family")
    p.add_argument("-g", "--graph", default=None, help="TSV graph file (refinement pipeline)")
    p.add_argument("--ground", default="0", help="special vertex for refinement (label or index)")
    _add_family_args(p, family_required=False)
    p.add_argument("--limit", action="store_true",
                   help="emit the rescaled k->infinity limit (family mode only)")
    p.add_argument("--format", choices=("tsv", "dot", "json"), default="tsv")
    p.add_argument("-o", "--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("sweep", help="family sweep or block-path report with CSV/JSON/PNG output")
    _add_family_args(p, family_required=True)
    p.add_argument("--max-k", type=int, default=experiments.DEFAULT_MAX_K,
                   help=f"doubling-schedule cap (default {experiments.DEFAULT_MAX_K})")
    p.add_argument("--start-k", type=int, default=None, help="doubling-schedule start")
    p.add_argument("--tol", type=float, default=eigen.DEFAULT_TOL)
    p.add_argument("-o", "--out", default=None,
                   help="output base path; writes .csv, .json and .png (default: CSV to stdout)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("perturb", help="random weight-noise stability of one spectral path")
    p.add_argument("-g", "--graph", required=True, help="TSV graph file")
    p.add_argument("--ground", required=True, help="special vertex (label or index)")
    p.add_argument("--from", dest="src", required=True, help="start vertex of the baseline path")
    p.add_argument("--forced", required=True, help="vertex the baseline path must contain")
    p.add_argument("--epsilons", type=_epsilon_list,
                   default=[1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6],
                   help="comma-separated noise magnitudes")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=eigen.DEFAULT_TOL)
    p.add_argument("-o", "--out", default=None,
                   help="output base path; writes .json and .png (default: JSON to stdout)")
    p.set_defaults(func=_cmd_perturb)

    p = sub.add_parser("rw-report", help="random-walk Fiedler descent-bound report")
    p.add_argument("-g", "--graph", required=True, help="TSV graph file")
    p.add_argument("-o", "--out", default=None,
                   help="output base path; writes .json and .png (default: JSON to stdout)")
    p.set_defaults(func=_cmd_rw_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpectralPathsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
