"""Command-line harness: regenerates the accuracy tables and figure datasets,
runs the coefficient reconciliation, and benchmarks evaluation speed.

Exit codes: 0 success, 2 usage/domain error, 3 I/O error.
"""

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .approximations import (DEFAULT_PHI9, eval_cdf_extended, evaluator,
                             list_approximations)
from .errors import DomainError
from .inverse import quantile_approx
from .metrics import (DEFAULT_INVERSE_GRID, GRID_A, GRID_B, GridSpec,
                      build_grid, compute_error_report, error_curve,
                      inverse_table)
from .reconcile import reconcile_phi9, write_report
from .reference import ref_cdf

_BENCH_MIN_EVALS = 1_000_000
_WARMUP_EVALS = 20_000
_FIG2_GRID = GridSpec(0.0, 4.8, 0.01)


@dataclass(frozen=True)
class BenchResult:
    """Timing of one subject over a fixed number of evaluations."""

    subject: str
    evaluations: int
    wall_time: float

    @property
    def per_eval(self) -> float:
        return self.wall_time / self.evaluations


def _cell(v) -> str:
    # full-precision columns use the shortest round-trip decimal form
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _render_csv(headers, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _render_markdown(sections) -> str:
    parts = []
    for title, headers, rows in sections:
        lines = []
        if title:
            lines.append(f"### {title}")
            lines.append("")
        lines.append("| " + " | ".join(headers) + " |")
        lines.append("|" + "|".join(" --- " for _ in headers) + "|")
        for row in rows:
            lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
        parts.append("\n".join(lines))
    return "\n\n".join(parts) + "\n"


def _render_json(command, meta, headers, rows) -> str:
    obj = {
        "meta": {"command": command, "version": __version__,
                 "phi9_variant": DEFAULT_PHI9.variant_tag, **meta},
        "rows": [dict(zip(headers, row)) for row in rows],
    }
    return json.dumps(obj, indent=2) + "\n"


def _grid_meta(spec: GridSpec) -> dict:
    return {"grid": {"start": spec.start, "stop": spec.stop,
                     "step": spec.step, "count": spec.count}}


def _render(fmt, command, meta, headers, rows, markdown_sections=None):
    if fmt == "csv":
        return _render_csv(headers, rows)
    if fmt == "json":
        return _render_json(command, meta, headers, rows)
    return _render_markdown(markdown_sections or [("", headers, rows)])


def _emit(args, text) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _grid_from_args(args, default: GridSpec) -> GridSpec:
    start = default.start if args.grid_start is None else args.grid_start
    stop = default.stop if args.grid_stop is None else args.grid_stop
    step = default.step if args.grid_step is None else args.grid_step
    return GridSpec(start=start, stop=stop, step=step)


def cmd_table2(args) -> int:
    spec = _grid_from_args(args, GRID_B)
    headers = ["approx", "name", "mxae", "mae",
               "mxae_full", "mae_full", "mxae_location"]
    rows = []
    for d in list_approximations():
        rep = compute_error_report(d.index, spec)
        rows.append([f"phi{d.index}", d.name, f"{rep.mxae:.2e}", f"{rep.mae:.2e}",
                     rep.mxae, rep.mae, rep.mxae_location])
    text = _render(args.format, "table2", _grid_meta(spec), headers, rows,
                   [("accuracy summary (MXAE / MAE)", headers, rows)])
    _emit(args, text)
    return 0


def cmd_table34(args) -> int:
    spec = _grid_from_args(args, DEFAULT_INVERSE_GRID)
    data = inverse_table(build_grid(spec))
    headers = ["z", "p", "zhat1", "zhat2", "zhat3",
               "delta1", "delta2", "delta3",
               "p_full", "zhat1_full", "zhat2_full", "zhat3_full",
               "delta1_full", "delta2_full", "delta3_full"]
    rows = []
    for r in data:
        rows.append([f"{r.z:.1f}", f"{r.p:.4f}",
                     f"{r.zhat1:.4f}", f"{r.zhat2:.4f}", f"{r.zhat3:.4f}",
                     f"{r.delta1:.5f}", f"{r.delta2:.5f}", f"{r.delta3:.5f}",
                     r.p, r.zhat1, r.zhat2, r.zhat3,
                     r.delta1, r.delta2, r.delta3])
    approx_rows = [row[0:5] for row in rows]
    delta_rows = [[row[0], row[1], row[5], row[6], row[7]] for row in rows]
    sections = [
        ("quantile approximations", ["z", "p", "zhat1", "zhat2", "zhat3"], approx_rows),
        ("signed differences (zhat - z)", ["z", "p", "delta1", "delta2", "delta3"], delta_rows),
    ]
    text = _render(args.format, "table34", _grid_meta(spec), headers, rows, sections)
    _emit(args, text)
    return 0


def cmd_curves(args) -> int:
    spec = _grid_from_args(args, GRID_A)
    curve = error_curve(args.approx, spec)
    fig2 = [(r.p, r.delta3) for r in inverse_table(build_grid(_FIG2_GRID))]

    outdir = Path(args.output or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    ext = {"csv": "csv", "json": "json", "markdown": "md"}[args.format]

    fig1_path = outdir / f"figure1_phi{args.approx}.{ext}"
    fig1_rows = [[z, d] for z, d in curve]
    fig1_path.write_text(
        _render(args.format, "curves.figure1", _grid_meta(spec),
                ["z", "diff"], fig1_rows,
                [(f"signed error of phi{args.approx}", ["z", "diff"], fig1_rows)]),
        encoding="utf-8")

    fig2_path = outdir / f"figure2_delta3.{ext}"
    fig2_rows = [[p, d] for p, d in fig2]
    fig2_path.write_text(
        _render(args.format, "curves.figure2", _grid_meta(_FIG2_GRID),
                ["p", "delta3"], fig2_rows,
                [("delta3 against p", ["p", "delta3"], fig2_rows)]),
        encoding="utf-8")

    print(fig1_path)
    print(fig2_path)
    return 0


def run_bench(evals: int) -> list[BenchResult]:
    """Time each approximation plus the oracle over grid-cycled inputs."""
    points = build_grid(GRID_A)
    data = [points[i % len(points)] for i in range(evals)]
    warm = data[:_WARMUP_EVALS]
    subjects = [(f"phi{d.index}", evaluator(d.index)) for d in list_approximations()]
    subjects.append(("oracle", ref_cdf))
    results = []
    sink = 0.0
    for label, fn in subjects:
        for z in warm:
            sink += fn(z)
        t0 = time.perf_counter()
        for z in data:
            sink += fn(z)
        results.append(BenchResult(subject=label, evaluations=evals,
                                   wall_time=time.perf_counter() - t0))
    assert sink > 0.0  # keeps the accumulation observable
    return results


def cmd_bench(args) -> int:
    if args.evals < _BENCH_MIN_EVALS:
        raise DomainError(f"--evals must be at least {_BENCH_MIN_EVALS} per subject")
    results = run_bench(args.evals)
    headers = ["subject", "evaluations", "wall_s", "per_eval_ns",
               "wall_time_full", "per_eval_full"]
    rows = [[r.subject, r.evaluations, f"{r.wall_time:.4f}",
             f"{r.per_eval * 1e9:.1f}", r.wall_time, r.per_eval]
            for r in results]
    text = _render(args.format, "bench", {"evaluations": args.evals},
                   headers, rows, [("evaluation throughput", headers, rows)])
    _emit(args, text)
    return 0


def cmd_reconcile(args) -> int:
    spec = _grid_from_args(args, GRID_B)
    report = reconcile_phi9(spec)
    path = args.output or "phi9_reconciliation.txt"
    write_report(report, path)
    sel = report.selected_report
    print(f"selected: {report.selected}")
    print(f"selected mxae: {sel.mxae:.6e} at z = {sel.mxae_location!r} "
          f"(gate {'passed' if report.gate_passed else 'failed'})")
    print(f"report written to {path}")
    return 0


def cmd_eval(args) -> int:
    headers = ["z", "value"]
    rows = [[z, eval_cdf_extended(args.approx, z)] for z in args.values]
    text = _render(args.format, "eval", {"approx": args.approx}, headers, rows)
    _emit(args, text)
    return 0


def cmd_invert(args) -> int:
    headers = ["p", "z"]
    rows = []
    for p in args.values:
        if not 0.0 < p < 1.0:
            raise DomainError("invert requires 0 < p < 1")
        z = quantile_approx(args.inverse, p) if p >= 0.5 \
            else -quantile_approx(args.inverse, 1.0 - p)
        rows.append([p, z])
    text = _render(args.format, "invert", {"inverse": args.inverse}, headers, rows)
    _emit(args, text)
    return 0


def _add_grid_flags(sp) -> None:
    sp.add_argument("--grid-start", type=float, default=None, metavar="REAL")
    sp.add_argument("--grid-stop", type=float, default=None, metavar="REAL")
    sp.add_argument("--grid-step", type=float, default=None, metavar="REAL")


def _add_io_flags(sp, default_format="markdown") -> None:
    sp.add_argument("--format", choices=("csv", "json", "markdown"),
                    default=default_format)
    sp.add_argument("--output", default=None, metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normapprox",
        description="closed-form normal-CDF approximation harness")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("table2", help="MXAE/MAE summary for phi1..phi9")
    _add_grid_flags(sp)
    _add_io_flags(sp)
    sp.set_defaults(func=cmd_table2)

    sp = sub.add_parser("table34", help="quantile approximations and differences")
    _add_grid_flags(sp)
    _add_io_flags(sp)
    sp.set_defaults(func=cmd_table34)

    sp = sub.add_parser("curves", help="figure datasets: signed error curve and delta3(p)")
    sp.add_argument("--approx", type=int, choices=range(1, 10), default=9)
    _add_grid_flags(sp)
    _add_io_flags(sp, default_format="csv")
    sp.set_defaults(func=cmd_curves)

    sp = sub.add_parser("bench", help="per-evaluation timing of phi1..phi9 and the oracle")
    sp.add_argument("--evals", type=int, default=_BENCH_MIN_EVALS)
    _add_io_flags(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("reconcile", help="score the phi9 coefficient variants")
    _add_grid_flags(sp)
    sp.add_argument("--output", default=None, metavar="PATH")
    sp.set_defaults(func=cmd_reconcile)

    sp = sub.add_parser("eval", help="evaluate one approximation (any finite z)")
    sp.add_argument("--approx", type=int, choices=range(1, 10), default=9)
    _add_io_flags(sp)
    sp.add_argument("values", type=float, nargs="+", metavar="Z")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("invert", help="evaluate one quantile approximation (0 < p < 1)")
    sp.add_argument("--inverse", type=int, choices=range(1, 4), default=3)
    _add_io_flags(sp)
    sp.add_argument("values", type=float, nargs="+", metavar="P")
    sp.set_defaults(func=cmd_invert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
