"""Deterministic rendering of reports as JSON, CSV, or human-readable text.

JSON is emitted by a small purpose-built serializer: key order is the
construction order and every float is formatted with 17 significant
digits, so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
import math

import numpy as np

__all__ = ["dumps_json", "format_float", "inequalities_csv", "rows_csv", "human_report"]


def format_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    text = format(x, ".17g")
    # ".17g" may yield bare integers; that is still a valid JSON number.
    return text


def _serialize(obj, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for k, (key, value) in enumerate(obj.items()):
            out.append(f"{pad}  {json.dumps(str(key))}: ")
            _serialize(value, indent + 1, out)
            out.append(",\n" if k < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            out.append("[]")
            return
        out.append("[\n")
        for k, value in enumerate(obj):
            out.append(pad + "  ")
            _serialize(value, indent + 1, out)
            out.append(",\n" if k < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, (bool, np.bool_)):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(format_float(float(obj)))
    elif obj is None:
        out.append("null")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} deterministically")


def dumps_json(obj) -> str:
    out: list[str] = []
    _serialize(obj, 0, out)
    return "".join(out) + "\n"


def _cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format_float(float(value))
    if value is None:
        return ""
    return str(value)


def rows_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines += [",".join(_cell(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def inequalities_csv(report: dict) -> str:
    rows = [
        [row["name"], row["lhs"], row["rhs"], row["pass"]]
        for row in report.get("inequalities", [])
    ]
    return rows_csv(["name", "lhs", "rhs", "pass"], rows)


def _fmt(value) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, (bool, np.bool_)):
        return "yes" if value else "no"
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.6g}"
    return str(value)


def human_report(report: dict) -> str:
    """Grouped plain-text rendering with the conventional symbol names."""
    lines: list[str] = []

    def section(title: str) -> None:
        if lines:
            lines.append("")
        lines.append(title)
        lines.append("-" * len(title))

    def row(label: str, key: str) -> None:
        if key in report:
            lines.append(f"  {label:<28} {_fmt(report[key])}")

    section("Graph")
    for label, key in [
        ("vertices n", "n"),
        ("edges", "edge_count"),
        ("unweighted", "unweighted"),
        ("loop-free", "loop_free"),
        ("connected", "connected"),
        ("diameter", "diameter"),
    ]:
        row(label, key)

    section("Surface metrics")
    for label, key in [
        ("S (surface area)", "s"),
        ("S_U (effective)", "s_u"),
        ("C = n/S (connectivity)", "connectivity"),
        ("n^2/vol floor", "cs_floor"),
    ]:
        row(label, key)

    section("Spectrum of H_U")
    for label, key in [
        ("lambda_1", "lambda1"),
        ("lambda_2", "lambda2"),
        ("lambda_n", "lambda_n"),
        ("lambda_2 (U=0)", "lambda2_0"),
        ("lambda_n (U=0)", "lambda_n_0"),
        ("max residual", "max_residual"),
    ]:
        row(label, key)
    if "trace_formula" in report:
        lines.append(f"  {'trace identity':<28} {_fmt(report['trace_formula']['pass'])}")

    section("Cheeger cut")
    for label, key in [
        ("h", "h_exact_or_sweep"),
        ("method", "cheeger_method"),
        ("sweep ratio", "sweep_ratio"),
    ]:
        row(label, key)

    section("Bounds")
    for label, key in [
        ("lambda_2 <= lambda_2(0)+S_U", "upper_lambda2_minmax"),
        ("lambda_2 <= 2h+S_U", "upper_lambda2_cheeger"),
        ("lambda_n lower bound", "lower_lambda_n"),
        ("  (half-weight variant)", "lower_lambda_n_statement_variant"),
        ("Q (edge max)", "jost_mulas_q"),
        ("delta (degree levels)", "delta"),
        ("Theta", "theta"),
        ("planar bound (8d+Th)/S", "planar_bound"),
        ("  applicable", "planar_bound_applicable"),
        ("max-degree bound", "pluemer_bound"),
        ("  applicable", "pluemer_bound_applicable"),
        ("Euler check", "euler_check"),
    ]:
        row(label, key)

    if report.get("inequalities"):
        section("Inequalities")
        for ineq in report["inequalities"]:
            verdict = "PASS" if ineq["pass"] else "FAIL"
            lines.append(
                f"  [{verdict}] {ineq['name']}: {_fmt(ineq['lhs'])} vs {_fmt(ineq['rhs'])}"
            )
    if report.get("errors"):
        section("Field errors")
        for key, msg in report["errors"].items():
            lines.append(f"  {key}: {msg}")
    return "\n".join(lines) + "\n"
