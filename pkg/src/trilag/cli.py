"""Command-line front end.

Subcommands: construct, lagrangian, reduce, optimize, certify, enumerate,
validate-fdf, pipeline.  Reports default to JSON (sorted keys, so output
is reproducible); CSV covers the enumeration maxima table; text gives a
one-screen summary.

Exit codes: 0 all checks pass, 1 usage or I/O error, 2 a mathematical
check failed (a violation, a failed chain link, or an indeterminate
certificate -- worth a bug report either way).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .certify import CERTIFIED, certify
from .fileio import ParseError, parse_graph, parse_weights
from .graphs import OrientedGraph, build_bf, build_cf, build_f, edge_density, underlying
from .harness import enumerate_orientations, pipeline_report, validate_fdf_family
from .lagrangian import lagrangian_bf, lagrangian_cf
from .reduction import WeightedGraph, reduce_to_complete, trace_to_jsonable
from .simplex import maximize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH_FAIL = 2


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str]
    seed: int
    out: str | None
    fmt: str
    threads: int


def _emit(payload, cfg: RunConfig, text_lines=None, csv_rows=None) -> None:
    if cfg.fmt == "json":
        rendered = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif cfg.fmt == "csv":
        if csv_rows is None:
            raise ParseError("<args>", 0, f"csv format not supported for {cfg.subcommand}")
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in csv_rows:
            writer.writerow(row)
        rendered = buf.getvalue()
    else:
        rendered = "\n".join(text_lines or [json.dumps(payload)]) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)


def _lag_json(lv) -> dict:
    return {
        "value": str(lv.value),
        "triple_term": str(lv.triple_term),
        "pair_term": str(lv.pair_term),
        "quadratic_term": str(lv.quadratic_term),
    }


def _cmd_construct(args, cfg: RunConfig) -> int:
    g = parse_graph(args.graph)
    if isinstance(g, OrientedGraph):
        f, cf = build_f(g), build_cf(g)
        bf = build_bf(underlying(g))
        payload = {
            "input": "digraph",
            "n": g.n,
            "f_triples": f.sorted_triples(),
            "cf_triples": cf.sorted_triples(),
            "bf_triples": bf.sorted_triples(),
            "cf_density": str(edge_density(cf)) if g.n >= 3 else None,
        }
        text = [
            f"digraph on {g.n} vertices",
            f"F  triples: {f.sorted_triples()}",
            f"CF triples: {cf.sorted_triples()}",
            f"BF triples: {bf.sorted_triples()}",
        ]
    else:
        bf = build_bf(g)
        payload = {
            "input": "graph",
            "n": g.n,
            "bf_triples": bf.sorted_triples(),
            "bf_density": str(edge_density(bf)) if g.n >= 3 else None,
        }
        text = [f"graph on {g.n} vertices", f"BF triples: {bf.sorted_triples()}"]
    _emit(payload, cfg, text_lines=text)
    return EXIT_OK


def _cmd_lagrangian(args, cfg: RunConfig) -> int:
    g = parse_graph(args.graph)
    w = parse_weights(args.weights, expected_n=g.n)
    if isinstance(g, OrientedGraph):
        lcf = lagrangian_cf(g, w)
        lbf = lagrangian_bf(underlying(g), w)
        payload = {"lagrangian_cf": _lag_json(lcf), "lagrangian_bf_underlying": _lag_json(lbf)}
        text = [f"L_CF = {lcf.value}", f"L_BF(underlying) = {lbf.value}"]
    else:
        lbf = lagrangian_bf(g, w)
        payload = {"lagrangian_bf": _lag_json(lbf)}
        text = [f"L_BF = {lbf.value}"]
    _emit(payload, cfg, text_lines=text)
    return EXIT_OK


def _cmd_reduce(args, cfg: RunConfig) -> int:
    g = parse_graph(args.graph)
    if isinstance(g, OrientedGraph):
        g = underlying(g)
    w = parse_weights(args.weights, expected_n=g.n)
    final, trace = reduce_to_complete(WeightedGraph(g, w))
    monotone = all(s.lagrangian_after >= s.lagrangian_before for s in trace)
    payload = {
        "trace": trace_to_jsonable(trace),
        "final_order": final.graph.n,
        "final_weights": [str(v) for v in final.weights],
        "final_lagrangian": str(lagrangian_bf(final.graph, final.weights).value),
        "monotone": monotone,
    }
    text = [
        f"merges: {len(trace)}, final complete graph order {final.graph.n}",
        f"final L_BF = {payload['final_lagrangian']}",
        f"monotone: {monotone}",
    ]
    _emit(payload, cfg, text_lines=text)
    return EXIT_OK if monotone else EXIT_MATH_FAIL


def _cmd_optimize(args, cfg: RunConfig) -> int:
    result = maximize(args.n, restarts=args.restarts, seed=cfg.seed, tol=args.tol)
    payload = {
        "n": result.n,
        "value": float(result.value),
        "value_exact": str(result.value),
        "point": list(result.point),
        "exact_point": [str(v) for v in result.exact_point],
        "restarts": result.restarts,
        "seed": result.seed,
        "residual": result.residual,
        "converged": result.converged,
    }
    text = [
        f"n={result.n}: max ~ {float(result.value):.12f} (exact {result.value})",
        f"argmax ~ {tuple(round(v, 6) for v in result.point)}",
    ]
    _emit(payload, cfg, text_lines=text)
    return EXIT_OK


def _cmd_certify(args, cfg: RunConfig) -> int:
    cert = certify(
        Fraction(args.delta), max_depth=args.max_depth, method=args.method, seed=cfg.seed
    )
    payload = cert.to_jsonable()
    text = [
        f"result: {cert.result}",
        f"cells processed: {cert.cells_processed}, leaves: {len(cert.leaves)}, "
        f"max depth reached: {cert.max_depth_reached}",
    ] + [
        f"excision at ({','.join(str(c) for c in e.center)}): grid min {e.grid_min} "
        f"over {e.points_checked} points"
        for e in cert.excisions
    ]
    _emit(payload, cfg, text_lines=text)
    return EXIT_OK if cert.result == CERTIFIED else EXIT_MATH_FAIL


def _cmd_enumerate(args, cfg: RunConfig) -> int:
    report = enumerate_orientations(args.n, threads=cfg.threads)
    payload = report.to_jsonable()
    csv_rows = [
        ["n", "count", "max_cf_density", "max_cf_density_witness",
         "max_uniform_lcf", "max_uniform_lcf_witness", "violations"],
        [report.n, report.count, str(report.max_cf_density), report.max_cf_density_witness,
         str(report.max_uniform_lcf), report.max_uniform_lcf_witness, len(report.violations)],
    ]
    text = [
        f"n={report.n}: {report.count} orientations, {len(report.violations)} violations",
        f"max CF density {report.max_cf_density} at index {report.max_cf_density_witness}",
        f"max uniform L_CF {report.max_uniform_lcf} at index {report.max_uniform_lcf_witness}",
    ]
    _emit(payload, cfg, text_lines=text, csv_rows=csv_rows)
    return EXIT_OK if not report.violations else EXIT_MATH_FAIL


def _cmd_validate_fdf(args, cfg: RunConfig) -> int:
    report = validate_fdf_family(args.n, threads=cfg.threads)
    text = [
        f"n={report['n']}: {report['c4_free_count']} C4-free orientations of {report['count']}, "
        f"{len(report['counterexamples'])} counterexamples",
    ]
    _emit(report, cfg, text_lines=text)
    return EXIT_OK if not report["counterexamples"] else EXIT_MATH_FAIL


def _cmd_pipeline(args, cfg: RunConfig) -> int:
    g = parse_graph(args.graph)
    if not isinstance(g, OrientedGraph):
        raise ParseError(args.graph, 1, "pipeline expects a digraph")
    w = parse_weights(args.weights, expected_n=g.n)
    report = pipeline_report(g, w)
    chain = " <= ".join(
        [report["lagrangian_cf"], report["lagrangian_bf"], report["closed_form_value"],
         report["trivariate_value"], report["bound"]]
    )
    text = [f"chain: {chain}"] + [
        f"  {'PASS' if link['pass'] else 'FAIL'} {link['name']}" for link in report["links"]
    ]
    _emit(report, cfg, text_lines=text)
    return EXIT_OK if report["all_pass"] else EXIT_MATH_FAIL


GLOBAL_DEFAULTS = {"format": "json", "out": None, "seed": 0, "threads": 1}


def _global_flags() -> argparse.ArgumentParser:
    """Flags accepted both before and after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report to this path")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    parser = argparse.ArgumentParser(
        prog="trilag",
        description="Exact toolkit for 3-graph Lagrangian bounds and their certification.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add("construct", help="build F/CF/BF triple systems from a graph file")
    p.add_argument("graph")
    p.set_defaults(run=_cmd_construct)

    p = add("lagrangian", help="evaluate the Lagrangians at given weights")
    p.add_argument("graph")
    p.add_argument("weights")
    p.set_defaults(run=_cmd_lagrangian)

    p = add("reduce", help="symmetrize to a complete graph, tracing each merge")
    p.add_argument("graph")
    p.add_argument("weights")
    p.set_defaults(run=_cmd_reduce)

    p = add("optimize", help="maximize the closed form on the simplex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--restarts", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(run=_cmd_optimize)

    p = add("certify", help="branch-and-bound positivity certificate for 3/32 - g")
    p.add_argument("--delta", default="1/1024", help="excision radius (rational)")
    p.add_argument("--max-depth", type=int, default=40)
    p.add_argument("--method", choices=("interval", "bernstein", "both"), default="both")
    p.set_defaults(run=_cmd_certify)

    p = add("enumerate", help="exhaustive checks over all labeled orientations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=_cmd_enumerate)

    p = add("validate-fdf", help="independent-4-set check for C4-free orientations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=_cmd_validate_fdf)

    p = add("pipeline", help="full inequality chain on one instance")
    p.add_argument("graph")
    p.add_argument("weights")
    p.set_defaults(run=_cmd_pipeline)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, default in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, default)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    cfg = RunConfig(
        subcommand=args.subcommand,
        inputs=[getattr(args, k) for k in ("graph", "weights") if hasattr(args, k)],
        seed=args.seed,
        out=args.out,
        fmt=args.format,
        threads=args.threads,
    )
    try:
        return args.run(args, cfg)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
