"""Command-line entry point.

Exit statuses: 0 success, 1 usage or parse error, 2 precondition
violation, 3 verification failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .braess import is_twin_braess, paradox_scan
from .ensembles import run_gnp_experiment, run_tree_experiment
from .errors import TwinBraessError
from .forests import forest_data
from .graph import ParsedGraph, find_pendant_twins, read_edge_list, require_connected
from .kemeny import kemeny_combinatorial, kemeny_spectral
from .report import (
    braess_csv_rows,
    braess_json,
    decimal_str,
    exact_json,
    experiment_csv,
    experiment_json,
    matrix_json,
    paradox_csv_rows,
    paradox_json,
    rational_str,
    to_csv,
    to_json,
)
from .verify import ORACLE_MAX_N, VERIFY_MAX_N, run_verification

DEFAULT_SEED = 20190905
EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3

log = logging.getLogger("twinbraess")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, default_format: str = "text", needs_input: bool = False) -> None:
    p.add_argument("--input", "-i", required=needs_input, metavar="PATH", help="edge-list file")
    p.add_argument("--format", "-f", choices=("json", "csv", "text"), default=default_format)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
    p.add_argument("--output", "-o", metavar="PATH", help="write to PATH instead of stdout")
    p.add_argument("--detail", action="store_true", help="include matrices / per-sample records")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twinbraess", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="tau, Kemeny's constant, pendant twins")
    _common(p, needs_input=True)

    p = sub.add_parser("braess", help="per-vertex twin-Braess report")
    _common(p, needs_input=True)
    p.add_argument("--vertex", type=int, help="report a single vertex (internal id)")

    p = sub.add_parser("paradox", help="Kemeny change for every non-edge")
    _common(p, needs_input=True)

    p = sub.add_parser("verify", help="exhaustive check over small connected graphs")
    _common(p)
    p.add_argument("--max-n", type=int, default=VERIFY_MAX_N)

    p = sub.add_parser("experiment", help="random-ensemble statistics")
    _common(p, default_format="csv")
    p.add_argument("--kind", choices=("trees", "gnp"), default="trees")
    p.add_argument("--n", type=int, nargs="+", default=[4, 8, 16, 32], dest="n_values")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--mode", choices=("sampled", "exhaustive"), default="sampled")
    p.add_argument("--full-scan", action="store_true", help="scan every non-edge of each tree")
    p.add_argument("--max-attempts", type=int, default=10_000)
    return parser


def _load(args: argparse.Namespace) -> ParsedGraph:
    parsed = read_edge_list(args.input)
    require_connected(parsed.graph)
    return parsed


def _text(pairs: Sequence[tuple[str, Any]]) -> str:
    return "".join(f"{k}: {v}\n" for k, v in pairs)


def cmd_analyze(args: argparse.Namespace) -> tuple[str, int]:
    parsed = _load(args)
    g = parsed.graph
    fd = forest_data(g)
    twins = find_pendant_twins(g)
    kappa = kemeny_combinatorial(g) if g.n >= 2 else None
    spectral = kemeny_spectral(g) if g.n >= 2 else None
    if args.format == "json":
        out: dict[str, Any] = {
            "graph": g.to_dict(),
            "n": g.n,
            "m": g.m,
            "tau": str(fd.tau),
            "kappa": exact_json(kappa) if kappa is not None else None,
            "kappa_spectral": spectral,
            "pendant_twins": [list(t) for t in twins],
            "seed": args.seed,
        }
        if parsed.remapped:
            out["labels"] = list(parsed.labels)
        if args.detail:
            out["omega"] = matrix_json(fd.omega)
            out["s"] = matrix_json(fd.s)
        return to_json(out), EXIT_OK
    if args.format == "csv":
        row = {
            "n": g.n,
            "m": g.m,
            "tau": fd.tau,
            "kappa": decimal_str(kappa) if kappa is not None else "",
            "kappa_spectral": f"{spectral:.12g}" if spectral is not None else "",
            "pendant_twin_pairs": len(twins),
        }
        return to_csv([row]), EXIT_OK
    lines: list[tuple[str, Any]] = [("n", g.n), ("m", g.m), ("tau", fd.tau)]
    if kappa is not None:
        lines += [("kappa", f"{rational_str(kappa)} = {decimal_str(kappa)}"), ("kappa_spectral", f"{spectral:.12g}")]
    lines.append(("pendant_twins", ", ".join(f"({a},{b}) at {v}" for a, b, v in twins) or "none"))
    if parsed.remapped:
        lines.append(("labels", " ".join(f"{i}<-{lab}" for i, lab in enumerate(parsed.labels))))
    text = _text(lines)
    if args.detail:
        text += "omega:\n" + "".join("  " + " ".join(rational_str(x) for x in r) + "\n" for r in fd.omega)
        text += "s:\n" + "".join("  " + " ".join(str(x) for x in r) + "\n" for r in fd.s_rows)
    return text, EXIT_OK


def cmd_braess(args: argparse.Namespace) -> tuple[str, int]:
    g = _load(args).graph
    report = is_twin_braess(g, None if args.vertex is None else [args.vertex])
    if args.format == "json":
        return to_json(braess_json(report)), EXIT_OK
    if args.format == "csv":
        return to_csv(braess_csv_rows(report)), EXIT_OK
    lines = [
        f"v={ev.v} lambda_v={rational_str(ev.lambda_v)} kappa_tilde={decimal_str(ev.kappa_tilde)} "
        f"kappa_hat={decimal_str(ev.kappa_hat)} twin_braess={ev.verdict}\n"
        for ev in report.vertices
    ]
    return "".join(lines) + f"overall: {report.overall}\n", EXIT_OK


def cmd_paradox(args: argparse.Namespace) -> tuple[str, int]:
    g = _load(args).graph
    scan = paradox_scan(g)
    if args.format == "json":
        return to_json(paradox_json(scan)), EXIT_OK
    if args.format == "csv":
        return to_csv(paradox_csv_rows(scan)) or "u,v,delta,paradoxical\n", EXIT_OK
    lines = [f"kappa: {rational_str(scan.kappa)} = {decimal_str(scan.kappa)}\n"]
    if not scan.deltas:
        lines.append("no non-edges\n")
    for d in scan.deltas:
        lines.append(
            f"{d.edge[0]} {d.edge[1]} delta={rational_str(d.delta)} ({decimal_str(d.delta)}) "
            f"paradoxical={d.verdict}\n"
        )
    lines.append(f"paradoxical: {scan.overall}\n")
    if scan.witness:
        lines.append(f"witness: {scan.witness[0]} {scan.witness[1]}\n")
    return "".join(lines), EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    summary = run_verification(args.max_n, oracle_max_n=min(ORACLE_MAX_N, args.max_n))
    code = EXIT_OK if summary.ok else EXIT_VERIFY
    data = summary.to_dict()
    if args.format == "json":
        return to_json(data), code
    if args.format == "csv":
        rows = [{"check": k, "cases": v} for k, v in summary.checked.items()]
        rows.append({"check": "failures", "cases": len(summary.failures)})
        return to_csv(rows), code
    lines = [
        ("graphs", " ".join(f"n={n}:{c}" for n, c in summary.graphs_by_n.items())),
        ("graphs_total", data["graphs_total"]),
        *summary.checked.items(),
        ("max_kemeny_gap", f"{summary.max_kemeny_gap:.3e}"),
        ("failures", len(summary.failures)),
        ("seconds", f"{summary.seconds:.1f}"),
    ]
    return _text(lines) + "".join(f"FAIL {f}\n" for f in summary.failures), code


def cmd_experiment(args: argparse.Namespace) -> tuple[str, int]:
    if args.kind == "trees":
        report = run_tree_experiment(
            args.n_values, args.samples, args.seed, args.mode, full_scan=args.full_scan, detail=args.detail
        )
    else:
        if args.mode != "sampled":
            raise UsageError("gnp experiments support --mode sampled only")
        report = run_gnp_experiment(
            args.n_values, args.p, args.samples, args.seed, args.max_attempts, detail=args.detail
        )
    header = [
        f"twinbraess experiment kind={report.kind} seed={args.seed} samples={args.samples} "
        f"mode={args.mode}" + (f" p={args.p}" if report.kind == "gnp" else "")
    ]
    if report.kind == "trees" and not args.full_scan:
        header.append(
            "scan=twin-witness: only twin edges are tested, so fraction_paradoxical is a lower bound; "
            "use --full-scan to test every non-edge"
        )
    if args.format == "json":
        data = experiment_json(report, detail=args.detail)
        data["seed"] = args.seed
        return to_json(data), EXIT_OK
    if args.format == "text":
        lines = [h + "\n" for h in header] + [f"note: {report.note}\n"]
        for r in report.rows:
            lines.append(
                f"n={r.n} samples={r.samples} pendant_twins={r.fraction_with_pendant_twins:.4f} "
                f"paradoxical={r.fraction_paradoxical:.4f} twin_paradoxical={r.twin_bearing_paradoxical}/"
                f"{r.with_pendant_twins} mean_cherry={r.mean_appearance_count:.4f} scan={r.scan}\n"
            )
        return "".join(lines), EXIT_OK
    if args.detail and args.output:
        detail_path = Path(args.output).with_suffix(".detail.json")
        data = experiment_json(report, detail=True)
        data["seed"] = args.seed
        detail_path.write_text(to_json(data), encoding="utf-8")
    return experiment_csv(report, header), EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "braess": cmd_braess,
    "paradox": cmd_paradox,
    "verify": cmd_verify,
    "experiment": cmd_experiment,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"twinbraess: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"twinbraess: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TwinBraessError as exc:
        print(f"twinbraess: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"twinbraess: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
