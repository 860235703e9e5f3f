"""Plain-data renderings of results for JSON, CSV and text output.

Exact rationals become ``"p/q"`` strings next to a 12-significant-digit
decimal; CSV carries the decimal only.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .braess import BraessReport, ParadoxScan, VertexEvidence
from .ensembles import ExperimentReport, ExperimentRow
from .exact import ExactMatrix
from .graph import Graph

DECIMAL_DIGITS = 12


def decimal_str(x: Fraction | int) -> str:
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = DECIMAL_DIGITS
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return format(d, "g") if d != 0 else "0"


def rational_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def exact_json(x: Fraction | int) -> dict[str, str]:
    return {"exact": rational_str(x), "decimal": decimal_str(x)}


def matrix_json(m: ExactMatrix) -> list[list[str]]:
    return [[rational_str(x) for x in r] for r in m]


def vertex_json(ev: VertexEvidence) -> dict[str, Any]:
    return {
        "v": ev.v,
        "lambda_v": exact_json(ev.lambda_v),
        "kappa_tilde": exact_json(ev.kappa_tilde),
        "kappa_hat": exact_json(ev.kappa_hat),
        "verdict": ev.verdict,
    }


def braess_json(report: BraessReport) -> dict[str, Any]:
    return {
        "graph": report.graph.to_dict(),
        "vertices": [vertex_json(ev) for ev in report.vertices],
        "overall": report.overall,
    }


def braess_csv_rows(report: BraessReport) -> list[dict[str, Any]]:
    return [
        {
            "v": ev.v,
            "lambda_v": decimal_str(ev.lambda_v),
            "kappa_tilde": decimal_str(ev.kappa_tilde),
            "kappa_hat": decimal_str(ev.kappa_hat),
            "verdict": ev.verdict,
        }
        for ev in report.vertices
    ]


def paradox_json(scan: ParadoxScan) -> dict[str, Any]:
    return {
        "graph": scan.graph.to_dict(),
        "kappa": exact_json(scan.kappa),
        "non_edges": [
            {"edge": list(d.edge), "delta": exact_json(d.delta), "paradoxical": d.verdict}
            for d in scan.deltas
        ],
        "paradoxical": scan.overall,
        "witness": list(scan.witness) if scan.witness else None,
    }


def paradox_csv_rows(scan: ParadoxScan) -> list[dict[str, Any]]:
    return [
        {"u": d.edge[0], "v": d.edge[1], "delta": decimal_str(d.delta), "paradoxical": d.verdict}
        for d in scan.deltas
    ]


def experiment_json(report: ExperimentReport, detail: bool = False) -> dict[str, Any]:
    rows = []
    for r in report.rows:
        row: dict[str, Any] = {
            "n": r.n,
            "samples": r.samples,
            "fraction_with_pendant_twins": r.fraction_with_pendant_twins,
            "fraction_paradoxical": r.fraction_paradoxical,
            "with_pendant_twins": r.with_pendant_twins,
            "twin_bearing_paradoxical": r.twin_bearing_paradoxical,
            "mean_appearance_count": r.mean_appearance_count,
            "seed": r.seed,
            "mode": r.mode,
            "scan": r.scan,
        }
        if detail:
            row["samples_detail"] = [s.to_dict() for s in r.details]
        rows.append(row)
    return {"kind": report.kind, "note": report.note, "rows": rows}


def experiment_csv(report: ExperimentReport, header_lines: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    buf.write(f"# {report.note}\n")
    writer = csv.DictWriter(buf, fieldnames=list(ExperimentRow.CSV_FIELDS), lineterminator="\n")
    writer.writeheader()
    for r in report.rows:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def read_experiment_csv(text: str) -> list[dict[str, str]]:
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return list(csv.DictReader(lines))


def to_csv(rows: list[Mapping[str, Any]]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    return Graph.from_dict(data["graph"] if "graph" in data else data)
