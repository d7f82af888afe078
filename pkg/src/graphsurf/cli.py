"""Command-line front end.

Subcommands: analyze, spectrum, cheeger, surgery, sequence, gap,
generate. Graphs come either from a file (--input, edge list or JSON)
or from a named family (--family/--param). Output is JSON by default;
--output picks csv or human-readable text. The analyze command exits
with status 2 when any applicable theorem-backed inequality fails,
which indicates an implementation bug rather than a property of the
input.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import full_report, gap_gamma
from .cheeger import DEFAULT_EXACT_MAX, cheeger_exact, cheeger_sweep
from .generators import FAMILIES, generate
from .graphs import Graph, GraphError
from .io import (
    edge_list_text,
    graph_json_text,
    read_graph,
    read_potential_file,
)
from .report import dumps_json, human_report, inequalities_csv, rows_csv
from .spectral import EigensolverError, build_operator, eigenvalues
from .surface import Potential, analyze_sequence
from .surgery import attach_pending_edge, cut_edge, glue_at_vertices

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INEQUALITY_VIOLATION = 2


def _parse_ints(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def _parse_range(text: str) -> list[int]:
    """Accept "a..b" (inclusive), "a,b,c", or a single integer."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return _parse_ints(text)


def _load_graph(args) -> tuple[Graph, Potential | None]:
    if getattr(args, "family", None):
        params = _parse_ints(args.param) if args.param else []
        return generate(args.family, params), None
    if getattr(args, "input", None):
        return read_graph(args.input, fmt=args.format)
    raise GraphError("no graph given: use --input FILE or --family NAME --param P")


def _load_potential(args, g: Graph) -> Potential:
    if getattr(args, "potential", None):
        return read_potential_file(args.potential, g.n)
    if getattr(args, "potential_const", None) is not None:
        return Potential.constant(g.n, args.potential_const)
    return Potential.zeros(g.n)


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="graph file (edge list or JSON)")
    p.add_argument("--format", choices=["edgelist", "json"], help="force the input format")
    p.add_argument("--family", choices=sorted(FAMILIES), help="generate a named family instead")
    p.add_argument("--param", help="family parameters, e.g. '5' or '7,5'")


def _add_potential_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--potential", help="file with per-vertex potential values")
    p.add_argument("--potential-const", type=float, help="constant potential value")


def _add_output_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=["json", "csv", "human"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsurf",
        description="Surface-area invariants, normalized Schrodinger spectra, and eigenvalue bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant and bounds report")
    _add_graph_source(p)
    _add_potential_flags(p)
    p.add_argument("--planar", action="store_true", help="assert that the input graph is planar")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--exact-cheeger-max", type=int, default=DEFAULT_EXACT_MAX)
    p.add_argument("--partition-exhaustive-max", type=int, default=18)
    _add_output_flag(p)

    p = sub.add_parser("spectrum", help="eigenvalues with residual certificates")
    _add_graph_source(p)
    _add_potential_flags(p)
    p.add_argument("--tol", type=float, default=1e-8)
    _add_output_flag(p)

    p = sub.add_parser("cheeger", help="Cheeger cut (exact when small, sweep otherwise)")
    _add_graph_source(p)
    p.add_argument("--exact-cheeger-max", type=int, default=DEFAULT_EXACT_MAX)
    _add_output_flag(p)

    p = sub.add_parser("surgery", help="glue, cut, or pendant transformation")
    p.add_argument("kind", choices=["glue", "cut", "pend"])
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", choices=["edgelist", "json"])
    p.add_argument("--input2", help="second graph file (glue)")
    p.add_argument("--at", type=int, help="vertex in the first graph (glue, pend)")
    p.add_argument("--at2", type=int, help="vertex in the second graph (glue)")
    p.add_argument("--edge", help="bridge edge 'i,j' to cut")
    _add_output_flag(p)

    p = sub.add_parser("sequence", help="surface-area ratios along a growing family")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--param", required=True, help="parameter range, e.g. '4..64'")
    _add_output_flag(p)

    p = sub.add_parser("gap", help="planar bound minus max-degree bound on star-paths")
    p.add_argument("--m", required=True, help="m value or range, e.g. '3..40'")
    p.add_argument("--n", help="n value or range")
    p.add_argument("--alpha", type=int, help="use n = alpha*m per row")
    _add_output_flag(p)

    p = sub.add_parser("generate", help="emit a named family as a graph file")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    return parser


def cmd_analyze(args) -> tuple[str, int]:
    g, file_potential = _load_graph(args)
    u = _load_potential(args, g)
    if file_potential is not None and args.potential is None and args.potential_const is None:
        u = file_potential
    report = full_report(
        g,
        u,
        planar_asserted=args.planar,
        tol=args.tol,
        exact_cheeger_max=args.exact_cheeger_max,
        partition_exhaustive_max=args.partition_exhaustive_max,
    )
    if args.output == "csv":
        text = inequalities_csv(report)
    elif args.output == "human":
        text = human_report(report)
    else:
        text = dumps_json(report)
    code = EXIT_OK if report["all_inequalities_pass"] else EXIT_INEQUALITY_VIOLATION
    return text, code


def cmd_spectrum(args) -> tuple[str, int]:
    g, file_potential = _load_graph(args)
    u = _load_potential(args, g)
    if file_potential is not None and args.potential is None and args.potential_const is None:
        u = file_potential
    spec = eigenvalues(build_operator(g, u), tol=args.tol)
    records = spec.as_records()
    if args.output == "csv":
        rows = [[k + 1, r["lambda"], r["residual"]] for k, r in enumerate(records)]
        return rows_csv(["index", "lambda", "residual"], rows), EXIT_OK
    if args.output == "human":
        lines = [f"  lambda_{k + 1} = {r['lambda']:.12g}  (residual {r['residual']:.2e})"
                 for k, r in enumerate(records)]
        return "\n".join(lines) + "\n", EXIT_OK
    return dumps_json(records), EXIT_OK


def cmd_cheeger(args) -> tuple[str, int]:
    g, _ = _load_graph(args)
    if g.n <= args.exact_cheeger_max:
        cut = cheeger_exact(g, max_n=args.exact_cheeger_max)
    else:
        cut = cheeger_sweep(g)
    data = {"cut_set": list(cut.cut_set), "ratio": cut.ratio, "method": cut.method}
    if args.output == "csv":
        rows = [["ratio", cut.ratio], ["method", cut.method],
                ["cut_set", " ".join(map(str, cut.cut_set))]]
        return rows_csv(["key", "value"], rows), EXIT_OK
    if args.output == "human":
        return (f"  h = {cut.ratio:.12g} ({cut.method})\n  cut set: "
                f"{{{', '.join(map(str, cut.cut_set))}}}\n"), EXIT_OK
    return dumps_json(data), EXIT_OK


def cmd_surgery(args) -> tuple[str, int]:
    g, _ = read_graph(args.input, fmt=args.format)
    if args.kind == "glue":
        if not args.input2 or args.at is None or args.at2 is None:
            raise GraphError("glue needs --input2, --at, and --at2")
        g2, _ = read_graph(args.input2, fmt=args.format)
        outcome = glue_at_vertices(g, g2, args.at, args.at2)
    elif args.kind == "cut":
        if not args.edge:
            raise GraphError("cut needs --edge 'i,j'")
        i, j = _parse_ints(args.edge)
        outcome = cut_edge(g, i, j)
    else:
        if args.at is None:
            raise GraphError("pend needs --at VERTEX")
        outcome = attach_pending_edge(g, args.at)
    data = {
        "operation": args.kind,
        "before_surface": list(outcome.before_surface),
        "after_surface": list(outcome.after_surface),
        "inequality": outcome.inequality,
        "inequality_ok": outcome.inequality_ok,
        "result_sizes": [h.n for h in outcome.result],
    }
    if args.output == "csv":
        rows = [[k, v if not isinstance(v, list) else " ".join(map(str, v))]
                for k, v in data.items()]
        return rows_csv(["key", "value"], rows), EXIT_OK
    if args.output == "human":
        lines = [f"  {k}: {v}" for k, v in data.items()]
        return "\n".join(lines) + "\n", EXIT_OK
    return dumps_json(data), EXIT_OK


def cmd_sequence(args) -> tuple[str, int]:
    ks = _parse_range(args.param)
    profile = analyze_sequence(FAMILIES[args.family], ks)
    data = {"family": args.family, **profile.as_dict()}
    if args.output == "csv":
        rows = [[s, r] for s, r in zip(profile.sizes, profile.ratios)]
        return rows_csv(["size", "ratio"], rows), EXIT_OK
    if args.output == "human":
        lines = [f"  {args.family}: {profile.classification}",
                 f"  log-log slope   {profile.loglog_slope:.6g}",
                 f"  limit estimate  {profile.limit_estimate:.6g}"]
        return "\n".join(lines) + "\n", EXIT_OK
    return dumps_json(data), EXIT_OK


def cmd_gap(args) -> tuple[str, int]:
    ms = _parse_range(args.m)
    rows = []
    for m in ms:
        if args.alpha is not None:
            ns = [args.alpha * m]
        elif args.n:
            ns = _parse_range(args.n)
        else:
            raise GraphError("gap needs --n or --alpha")
        for n in ns:
            rows.append(gap_gamma(m, n))
    if args.output == "csv":
        table = [[r["m"], r["n"], r["direct"], r["closed_form"], r["negative"]] for r in rows]
        return rows_csv(["m", "n", "gamma_direct", "gamma_closed", "negative"], table), EXIT_OK
    if args.output == "human":
        lines = [
            f"  m={r['m']:<4d} n={r['n']:<5d} gamma={r['direct']:+.6f}"
            f"  {'negative' if r['negative'] else ''}"
            for r in rows
        ]
        return "\n".join(lines) + "\n", EXIT_OK
    return dumps_json(rows), EXIT_OK


def cmd_generate(args) -> tuple[str, int]:
    g = generate(args.family, _parse_ints(args.param))
    text = graph_json_text(g) + "\n" if args.format == "json" else edge_list_text(g)
    return text, EXIT_OK


_COMMANDS = {
    "analyze": cmd_analyze,
    "spectrum": cmd_spectrum,
    "cheeger": cmd_cheeger,
    "surgery": cmd_surgery,
    "sequence": cmd_sequence,
    "gap": cmd_gap,
    "generate": cmd_generate,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = _COMMANDS[args.command](args)
    except (GraphError, EigensolverError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
