"""Command-line interface: ``moqc solve | verify | plotdata``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .exceptions import (
    InvalidInputError, NoFeasibleQuasiCliqueError, SizeGuardError, TimeLimitExceeded,
)
from .graph import FORMATS, Graph, load_graph
from .pareto import LabeledFrontier, map_mos_to_moqc
from .reference import MAX_N, MAX_N_OVERRIDE, brute_frontier
from .strategies import STRATEGIES, run_moqc_alg1, run_moqc_alg2, solve_mos

EXIT_OK, EXIT_REFUSED, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_TIMEOUT, EXIT_MISMATCH = 0, 1, 2, 3, 4, 5

PLOT_COLUMNS = ("edges", "vertices", "density", "provenance", "certificate")


def _ratio(d: Fraction) -> str:
    return f"{d.numerator}/{d.denominator}"


def _labels(G: Graph, S) -> list:
    return [G.labels[v] for v in sorted(S)]


def frontier_document(G: Graph, strategy: str, status: str, entries, moqc, report,
                      precision: int = 6) -> dict:
    """JSON-serialisable record of one run."""
    mos = []
    for e in entries:
        d = Fraction(2 * e.m, e.k * (e.k - 1)) if e.k >= 2 else None
        mos.append({
            "edges": e.m, "vertices": e.k,
            "density": None if d is None else _ratio(d),
            "density_decimal": None if d is None else round(float(d), precision),
            "provenance": e.provenance, "certificate": e.certificate, "strong": e.strong,
            "witness": _labels(G, e.witness),
        })
    qc = [{"density": _ratio(p.density), "density_decimal": round(float(p.density), precision),
           "vertices": p.k, "witness": _labels(G, w)} for p, w in moqc]
    return {
        "status": status, "strategy": strategy,
        "graph": {"n": G.n, "m": G.m, "density": _ratio(G.density()) if G.n >= 2 else None},
        "mos": mos, "moqc": qc,
        "report": report.row(precision) if report is not None else None,
    }


def plot_rows(doc: dict, precision: int = 6) -> list[tuple]:
    """One ``(edges, vertices, density, provenance, certificate)`` row per point, by size."""
    if not isinstance(doc, dict) or not isinstance(doc.get("mos"), list):
        raise InvalidInputError("frontier document has no 'mos' list")
    if not doc["mos"]:
        raise InvalidInputError("frontier document holds no points")
    rows = []
    for p in sorted(doc["mos"], key=lambda p: p["vertices"]):
        d = p.get("density")
        dec = "" if d is None else f"{float(Fraction(d)):.{precision}f}"
        rows.append((int(p["edges"]), int(p["vertices"]), dec, p["provenance"], p["certificate"]))
    return rows


def _write_tsv(rows, fh):
    w = csv.writer(fh, delimiter="\t", lineterminator="\n")
    w.writerow(PLOT_COLUMNS)
    w.writerows(rows)


def _write_report(report, path, precision):
    row = report.row(precision)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=list(row))
        w.writeheader()
        w.writerow(row)


def _load(args) -> Graph:
    try:
        return load_graph(args.file, args.format)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {args.file}: {exc.strerror}") from exc


def _solve(G, strategy, time_limit):
    """Returns ``(entries, moqc pairs, report)``."""
    if strategy in ("alg1", "alg2"):
        fn = run_moqc_alg1 if strategy == "alg1" else run_moqc_alg2
        pts, wit, rep = fn(G, time_limit=time_limit)
        return [], list(zip(pts, wit)), rep
    final, rep = solve_mos(G, strategy, time_limit=time_limit)
    pts, wit = map_mos_to_moqc(final, G)
    return final.entries(), list(zip(pts, wit)), rep


def cmd_solve(args) -> int:
    G = _load(args)
    status, code = "ok", EXIT_OK
    try:
        entries, moqc, rep = _solve(G, args.strategy, args.time_limit)
    except TimeLimitExceeded as exc:
        status, code = "timeout", EXIT_TIMEOUT
        F = exc.frontier if exc.frontier is not None else LabeledFrontier()
        entries, moqc, rep = F.entries(), [], exc.report
        print(f"timeout: {exc}; partial results written", file=sys.stderr)
    doc = frontier_document(G, args.strategy, status, entries, moqc, rep, args.precision)
    text = json.dumps(doc, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.report and rep is not None:
        _write_report(rep, args.report, args.precision)
    if args.plot and entries:
        with open(args.plot, "w", newline="", encoding="utf-8") as fh:
            _write_tsv(plot_rows(doc, args.precision), fh)
    return code


def verify_graph(G: Graph, *, allow_large: bool = False, out=None) -> bool:
    """Run every strategy against exhaustive enumeration and print one line per check."""
    out = out or sys.stdout
    table = brute_frontier(G, allow_large=allow_large)
    want_mos = table.z_hat
    want_qc = [(Fraction(d), k) for d, k in table.moqc_nondominated]
    ok = True

    def report(name, passed):
        nonlocal ok
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}", file=out)

    for strategy in ("baseline", "two-phase", "three-phase"):
        F, _ = solve_mos(G, strategy)
        got = [tuple(p) for p in F.points()]
        report(f"{strategy} frontier", got == want_mos)
        report(f"{strategy} size law", len(got) == G.n - table.omega + 1)
        sound = all(e.m == table.max_edges[e.k] for e in F.entries())
        report(f"{strategy} certificates", sound)
        pts, _ = map_mos_to_moqc(F, G)
        report(f"{strategy} mapped quasi-cliques", [(p.density, p.k) for p in pts] == want_qc)
    for name, fn in (("alg1", run_moqc_alg1), ("alg2", run_moqc_alg2)):
        pts = fn(G)[0]
        report(f"{name} quasi-cliques", [(p.density, p.k) for p in pts] == want_qc)
    return ok


def cmd_verify(args) -> int:
    G = _load(args)
    limit = args.max_n if args.max_n is not None else (MAX_N_OVERRIDE if args.allow_large else MAX_N)
    if G.n > limit or G.n > MAX_N_OVERRIDE or (G.n > MAX_N and not args.allow_large):
        print(f"refused: n={G.n} exceeds the brute-force limit "
              f"({MAX_N}, or {MAX_N_OVERRIDE} with --allow-large)", file=sys.stderr)
        return EXIT_REFUSED
    if G.m == 0:
        raise NoFeasibleQuasiCliqueError("graph has no edges")
    return EXIT_OK if verify_graph(G, allow_large=args.allow_large) else EXIT_MISMATCH


def cmd_plotdata(args) -> int:
    try:
        with open(args.frontier, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {args.frontier}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed frontier JSON: {exc}") from exc
    try:
        rows = plot_rows(doc, args.precision)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"malformed frontier entry: {exc}") from exc
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            _write_tsv(rows, fh)
    else:
        buf = io.StringIO()
        _write_tsv(rows, buf)
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="moqc", description="Exact (density, size) quasi-clique frontiers.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="enumerate the frontier of a graph file")
    s.add_argument("file")
    s.add_argument("--format", choices=FORMATS, help="input format (default: from extension)")
    s.add_argument("--strategy", choices=STRATEGIES, default="three-phase")
    s.add_argument("--out", help="frontier JSON path (default: stdout)")
    s.add_argument("--report", help="report CSV path")
    s.add_argument("--plot", help="plot-data TSV path")
    s.add_argument("--time-limit", type=_positive_float, default=3600.0)
    s.add_argument("--precision", type=int, default=6, help="decimals for rendered densities")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="compare all strategies with exhaustive enumeration")
    v.add_argument("file")
    v.add_argument("--format", choices=FORMATS)
    v.add_argument("--max-n", type=int, default=None, help=f"size limit (default {MAX_N})")
    v.add_argument("--allow-large", action="store_true", help=f"allow up to {MAX_N_OVERRIDE} vertices")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("plotdata", help="turn a frontier JSON into plot-ready TSV")
    d.add_argument("frontier")
    d.add_argument("--out", help="TSV path (default: stdout)")
    d.add_argument("--precision", type=int, default=6)
    d.set_defaults(func=cmd_plotdata)
    return p


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NoFeasibleQuasiCliqueError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except SizeGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
