"""Batch evaluation over mask pairs, with CSV and JSON report emitters.

evaluate_batch is fail-soft: a pair that cannot be loaded or scored turns
into a BatchError entry instead of aborting the run, so one corrupt file
does not cost the rest of the batch. Records are sorted by pair id, which
makes reports independent of input ordering.

The CSV layout is one row per pair (id, raw counts, weak-label flag, one
column per selected metric) plus trailing `__mean__` and `__median__`
rows. The JSON layout carries the same data plus the evaluation config,
per-record gap-resolution flags, and the error list; undefined scores are
null there, empty cells in CSV.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal

from segscore.confusion import ConfusionMatrix, confusion_matrix
from segscore.errors import SegScoreError
from segscore.masks import DEFAULT_THRESHOLD, MaskPair, PairPaths, load_pair
from segscore.metrics import (
    DEFAULT_CONFIG,
    MetricConfig,
    MetricScore,
    canonical_selection,
    evaluate_all,
)

DEFAULT_EVAL_METRICS = ("dsc", "acc", "spec", "nmcc", "mism")

ReportFormat = Literal["csv", "json"]


@dataclass(frozen=True)
class EvalRecord:
    """Scores for one ground-truth/prediction pair.

    weak_label flags pairs whose ground truth has no foreground at all;
    those are exactly the cases where overlap metrics degenerate.
    """

    id: str
    matrix: ConfusionMatrix
    weak_label: bool
    scores: dict[str, MetricScore]


@dataclass(frozen=True)
class MetricAggregate:
    """Summary of one metric across a batch, over its defined scores."""

    mean: float | None
    median: float | None
    count_defined: int
    count_undefined: int


@dataclass(frozen=True)
class BatchError:
    id: str
    message: str


@dataclass(frozen=True)
class EvalReport:
    records: tuple[EvalRecord, ...]
    aggregates: dict[str, MetricAggregate]
    errors: tuple[BatchError, ...]
    config: MetricConfig
    selection: tuple[str, ...]
    threshold: int


def _aggregate(records: tuple[EvalRecord, ...],
               selection: tuple[str, ...]) -> dict[str, MetricAggregate]:
    out = {}
    for name in selection:
        values = [r.scores[name].value for r in records
                  if r.scores[name].value is not None]
        undefined = sum(1 for r in records if r.scores[name].value is None)
        if values:
            out[name] = MetricAggregate(statistics.fmean(values),
                                        statistics.median(values),
                                        len(values), undefined)
        else:
            out[name] = MetricAggregate(None, None, 0, undefined)
    return out


def evaluate_batch(pairs: Iterable[MaskPair | PairPaths],
                   cfg: MetricConfig = DEFAULT_CONFIG,
                   selection: Iterable[str] = DEFAULT_EVAL_METRICS,
                   threshold: int = DEFAULT_THRESHOLD) -> EvalReport:
    """Score every pair, collecting per-pair failures instead of raising.

    Accepts ready MaskPair objects or PairPaths to load lazily; threshold
    only applies to the latter. Selection validation errors still raise,
    since they poison the whole batch, not one pair.
    """
    selection = canonical_selection(selection)
    pairs = list(pairs)
    if not pairs:
        raise ValueError("no pairs to evaluate")
    records = []
    errors = []
    for item in pairs:
        if isinstance(item, PairPaths):
            try:
                pair = load_pair(item, threshold=threshold)
            except (SegScoreError, OSError, ValueError) as exc:
                errors.append(BatchError(item.id, str(exc)))
                continue
        else:
            pair = item
        try:
            m = confusion_matrix(pair.ground_truth, pair.prediction)
        except SegScoreError as exc:
            errors.append(BatchError(pair.id, str(exc)))
            continue
        records.append(EvalRecord(pair.id, m, m.p == 0,
                                  evaluate_all(m, cfg, selection)))
    records.sort(key=lambda r: r.id)
    errors.sort(key=lambda e: e.id)
    return EvalReport(tuple(records), _aggregate(tuple(records), selection),
                      tuple(errors), cfg, selection, threshold)


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.10g}"


def render_report_csv(report: EvalReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("id", "tp", "fp", "tn", "fn", "weak_label")
                    + report.selection)
    for r in report.records:
        m = r.matrix
        writer.writerow((r.id, m.tp, m.fp, m.tn, m.fn,
                         "true" if r.weak_label else "false")
                        + tuple(_fmt(r.scores[name].value)
                                for name in report.selection))
    for label, field in (("__mean__", "mean"), ("__median__", "median")):
        writer.writerow((label, "", "", "", "", "")
                        + tuple(_fmt(getattr(report.aggregates[name], field))
                                for name in report.selection))
    return buf.getvalue()


def render_report_json(report: EvalReport) -> str:
    doc = {
        "config": {
            "alpha": report.config.alpha,
            "undefined_policy": report.config.undefined_policy,
            "threshold": report.threshold,
            "metrics": list(report.selection),
        },
        "records": [
            {
                "id": r.id,
                "tp": r.matrix.tp,
                "fp": r.matrix.fp,
                "tn": r.matrix.tn,
                "fn": r.matrix.fn,
                "weak_label": r.weak_label,
                "scores": {name: r.scores[name].value
                           for name in report.selection},
                "undefined_resolved": [
                    name for name in report.selection
                    if r.scores[name].from_undefined
                    and r.scores[name].value is not None
                ],
            }
            for r in report.records
        ],
        "aggregates": {
            name: {
                "mean": agg.mean,
                "median": agg.median,
                "count_defined": agg.count_defined,
                "count_undefined": agg.count_undefined,
            }
            for name, agg in report.aggregates.items()
        },
        "errors": [{"id": e.id, "message": e.message} for e in report.errors],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_report(report: EvalReport, format: ReportFormat = "csv") -> str:
    if format == "csv":
        return render_report_csv(report)
    if format == "json":
        return render_report_json(report)
    raise ValueError(f"unknown report format {format!r}")


def emit_report(report: EvalReport, path, format: ReportFormat = "csv") -> Path:
    path = Path(path)
    path.write_text(render_report(report, format), encoding="utf-8")
    return path
