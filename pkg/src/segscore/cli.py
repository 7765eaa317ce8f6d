"""Command-line entry point.

Subcommands: eval (score paired mask directories), sweep (edge-case
curves to CSV/SVG), matrix (raw confusion counts for one pair), fixtures
(write the synthetic suite).

Exit codes: 0 on success, 1 when eval finished but some pairs failed
(the report is still emitted for the rest), 2 on usage errors. Reports
go to stdout unless --out is given; warnings, per-pair errors, and the
run summary go to stderr so pipelines stay clean.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from segscore.confusion import confusion_matrix
from segscore.errors import SegScoreError, UnknownMetricError
from segscore.fixtures import DEFAULT_FIXTURE_SIZE, generate_fixture_suite
from segscore.masks import DEFAULT_THRESHOLD, load_mask, pair_directories
from segscore.metrics import DEFAULT_ALPHA, MetricConfig, canonical_selection
from segscore.report import DEFAULT_EVAL_METRICS, evaluate_batch, render_report
from segscore.sweep import (
    DEFAULT_ALPHAS,
    DEFAULT_STEPS,
    DEFAULT_SWEEP_METRICS,
    DEFAULT_TOTAL_N,
    SweepSpec,
    emit_sweep_csv,
    emit_sweep_svg,
    run_sweep,
)


def _alpha_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(
            f"alpha must lie in the open interval (0, 1), got {text}")
    return value


def _alphas_arg(text: str) -> tuple[float, ...]:
    values = tuple(_alpha_arg(part.strip())
                   for part in text.split(",") if part.strip())
    if not values:
        raise argparse.ArgumentTypeError("at least one alpha is required")
    return values


def _metrics_arg(text: str) -> tuple[str, ...]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return canonical_selection(names)
    except UnknownMetricError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _threshold_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid threshold {text!r}") from None
    if not 0 <= value <= 255:
        raise argparse.ArgumentTypeError(
            f"threshold must lie in [0, 255], got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segscore",
        description="Confusion-matrix scoring for binary segmentation masks.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("eval",
                       help="score a directory of predictions against ground truth")
    p.add_argument("gt_dir", type=Path)
    p.add_argument("pred_dir", type=Path)
    p.add_argument("--alpha", type=_alpha_arg, default=DEFAULT_ALPHA,
                   help="true-negative weight in (0, 1), default %(default)s")
    p.add_argument("--threshold", type=_threshold_arg, default=DEFAULT_THRESHOLD,
                   help="gray level mapped to foreground, default %(default)s")
    p.add_argument("--metrics", type=_metrics_arg, default=DEFAULT_EVAL_METRICS,
                   metavar="IDS", help="comma-separated metric ids")
    p.add_argument("--undefined", choices=("zero", "propagate"), default="zero",
                   help="score definition gaps as 0 or keep them undefined")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path, default=None,
                   help="report path; stdout when omitted")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep",
                       help="score a growing FP fraction on an all-background image")
    p.add_argument("--n", type=int, default=DEFAULT_TOTAL_N,
                   help="total pixel count, default %(default)s")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS,
                   help="sample count over the FP range, default %(default)s")
    p.add_argument("--alphas", type=_alphas_arg, default=DEFAULT_ALPHAS,
                   metavar="LIST", help="comma-separated alphas")
    p.add_argument("--metrics", type=_metrics_arg, default=DEFAULT_SWEEP_METRICS,
                   metavar="IDS", help="comma-separated metric ids")
    p.add_argument("--csv", type=Path, default=None, help="CSV output path")
    p.add_argument("--svg", type=Path, default=None, help="SVG chart output path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("matrix",
                       help="print confusion counts for one mask pair")
    p.add_argument("gt_file", type=Path)
    p.add_argument("pred_file", type=Path)
    p.add_argument("--threshold", type=_threshold_arg, default=DEFAULT_THRESHOLD)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("fixtures", help="write the synthetic fixture suite")
    p.add_argument("out_dir", type=Path)
    p.add_argument("--size", type=int, default=DEFAULT_FIXTURE_SIZE,
                   help="square image side, default %(default)s")
    p.set_defaults(func=cmd_fixtures)

    return parser


def cmd_eval(args) -> int:
    pairing = pair_directories(args.gt_dir, args.pred_dir)
    for warning in pairing.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    policy = "score_zero" if args.undefined == "zero" else "propagate_undefined"
    cfg = MetricConfig(alpha=args.alpha, undefined_policy=policy)
    report = evaluate_batch(pairing.pairs, cfg, args.metrics,
                            threshold=args.threshold)
    text = render_report(report, args.format)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
    for err in report.errors:
        print(f"error: {err.id}: {err.message}", file=sys.stderr)
    weak = sum(1 for r in report.records if r.weak_label)
    print(f"evaluated {len(report.records)} pairs "
          f"({weak} weak labels, {len(report.errors)} errors)", file=sys.stderr)
    return 1 if report.errors else 0


def cmd_sweep(args) -> int:
    if args.csv is None and args.svg is None:
        raise ValueError("at least one of --csv or --svg is required")
    spec = SweepSpec(total_n=args.n, steps=args.steps,
                     alphas=args.alphas, metrics=args.metrics)
    table = run_sweep(spec)
    if args.csv is not None:
        emit_sweep_csv(table, args.csv)
    if args.svg is not None:
        emit_sweep_svg(table, args.svg)
    return 0


def cmd_matrix(args) -> int:
    gt = load_mask(args.gt_file, threshold=args.threshold)
    pred = load_mask(args.pred_file, threshold=args.threshold)
    m = confusion_matrix(gt, pred)
    print(f"{m.tp} {m.fp} {m.tn} {m.fn} {m.p} {m.n}")
    return 0


def cmd_fixtures(args) -> int:
    written = generate_fixture_suite(args.out_dir, size=args.size)
    print(f"wrote {2 * len(written)} mask files under {args.out_dir}",
          file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (SegScoreError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
