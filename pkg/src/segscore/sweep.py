"""Edge-case sweep: score a growing false-positive fraction at P = 0.

The sweep fixes an image of `total_n` pixels whose ground truth is all
background and walks the prediction from all-background to all-foreground.
Step i targets the FP fraction i / (steps - 1); the realized fraction is
the rounded integer count divided by total_n, and that realized value is
what lands in the output. This surfaces how each metric behaves on
weak-label images: overlap scores collapse, accuracy and specificity stay
saturated until late, and the weighted scores fall smoothly at a rate set
by alpha.

Output is a flat table (one row per metric, alpha, step) plus CSV and SVG
emitters. Both emitters are byte-deterministic for a given table.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

from segscore.confusion import ConfusionMatrix
from segscore.metrics import (
    ALPHA_METRICS,
    DEFAULT_ALPHA,
    MetricConfig,
    UndefinedPolicy,
    canonical_selection,
    evaluate_metric,
)

DEFAULT_TOTAL_N = 60000
DEFAULT_STEPS = 101
DEFAULT_ALPHAS = (0.05, 0.1, 0.25, 0.5)
DEFAULT_SWEEP_METRICS = ("dsc", "acc", "spec", "nmcc", "mism")

CSV_HEADER = ("ratio", "alpha", "metric", "score")


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: image size, resolution, alphas, and metrics."""

    total_n: int = DEFAULT_TOTAL_N
    steps: int = DEFAULT_STEPS
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    metrics: tuple[str, ...] = DEFAULT_SWEEP_METRICS
    undefined_policy: UndefinedPolicy = "score_zero"

    def __post_init__(self):
        if self.total_n < 1:
            raise ValueError(f"total_n must be at least 1, got {self.total_n}")
        if self.steps < 2:
            raise ValueError(f"a sweep needs at least 2 steps, got {self.steps}")
        alphas = tuple(sorted({float(a) for a in self.alphas}))
        for a in alphas:
            if not 0.0 < a < 1.0:
                raise ValueError(
                    f"alpha must lie in the open interval (0, 1), got {a}")
        metrics = canonical_selection(self.metrics)
        if not alphas and set(metrics) & ALPHA_METRICS:
            raise ValueError("alpha-dependent metrics selected but no alphas given")
        if self.undefined_policy not in ("score_zero", "propagate_undefined"):
            raise ValueError(f"unknown undefined policy {self.undefined_policy!r}")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "metrics", metrics)

    def series_keys(self) -> tuple[tuple[str, float | None], ...]:
        """(metric, alpha) pairs in output order; alpha None when unused."""
        keys = []
        for metric in self.metrics:
            if metric in ALPHA_METRICS:
                keys.extend((metric, a) for a in self.alphas)
            else:
                keys.append((metric, None))
        return tuple(keys)


class SweepPoint(NamedTuple):
    metric: str
    alpha: float | None
    ratio: float
    score: float | None
    from_undefined: bool


@dataclass(frozen=True)
class SweepTable:
    spec: SweepSpec
    points: tuple[SweepPoint, ...]

    def series(self, metric: str, alpha: float | None = None) -> tuple[SweepPoint, ...]:
        return tuple(p for p in self.points
                     if p.metric == metric and p.alpha == alpha)


def run_sweep(spec: SweepSpec = SweepSpec()) -> SweepTable:
    """Evaluate every (metric, alpha, step) cell of the sweep grid.

    Under the propagate_undefined policy, cells whose metric is undefined
    are dropped from the table so downstream consumers only ever see
    numeric scores; under score_zero they appear as flagged zeros.
    """
    last = spec.steps - 1
    grid = []
    for i in range(spec.steps):
        fp = round(i * spec.total_n / last)
        grid.append((fp / spec.total_n, fp))

    points = []
    for metric, alpha in spec.series_keys():
        cfg = MetricConfig(alpha=DEFAULT_ALPHA if alpha is None else alpha,
                           undefined_policy=spec.undefined_policy)
        for ratio, fp in grid:
            m = ConfusionMatrix(tp=0, fp=fp, tn=spec.total_n - fp, fn=0)
            score = evaluate_metric(metric, m, cfg)
            if score.value is None:
                continue
            points.append(SweepPoint(metric, alpha, ratio,
                                     score.value, score.from_undefined))
    return SweepTable(spec, tuple(points))


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.10g}"


def render_sweep_csv(table: SweepTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p in table.points:
        writer.writerow((_fmt(p.ratio), _fmt(p.alpha), p.metric, _fmt(p.score)))
    return buf.getvalue()


def emit_sweep_csv(table: SweepTable, path) -> Path:
    path = Path(path)
    path.write_text(render_sweep_csv(table), encoding="utf-8")
    return path


# fixed series palette, cycled when a sweep has more series than entries
_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")

_SVG_W, _SVG_H = 720, 430
_ML, _MT, _MR, _MB = 56, 16, 170, 48
_PLOT_W = _SVG_W - _ML - _MR
_PLOT_H = _SVG_H - _MT - _MB
_TICKS = (0.0, 0.25, 0.5, 0.75, 1.0)


def _series_label(metric: str, alpha: float | None) -> str:
    return metric if alpha is None else f"{metric} alpha={alpha:g}"


def render_sweep_svg(table: SweepTable) -> str:
    """Render the sweep as a standalone line chart (SVG 1.1, no scripts)."""
    def px(ratio: float) -> float:
        return _ML + ratio * _PLOT_W

    def py(score: float) -> float:
        return _MT + (1.0 - score) * _PLOT_H

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect x="0" y="0" width="{_SVG_W}" height="{_SVG_H}" fill="#ffffff"/>',
        f'<rect x="{_ML}" y="{_MT}" width="{_PLOT_W}" height="{_PLOT_H}" '
        f'fill="none" stroke="#999999"/>',
    ]
    for t in _TICKS:
        x, y = px(t), py(t)
        out.append(f'<line x1="{x:.2f}" y1="{_MT}" x2="{x:.2f}" '
                   f'y2="{_MT + _PLOT_H}" stroke="#e0e0e0"/>')
        out.append(f'<line x1="{_ML}" y1="{y:.2f}" x2="{_ML + _PLOT_W}" '
                   f'y2="{y:.2f}" stroke="#e0e0e0"/>')
        out.append(f'<text x="{x:.2f}" y="{_MT + _PLOT_H + 16}" '
                   f'font-family="sans-serif" font-size="11" '
                   f'text-anchor="middle">{t:g}</text>')
        out.append(f'<text x="{_ML - 6}" y="{y + 4:.2f}" '
                   f'font-family="sans-serif" font-size="11" '
                   f'text-anchor="end">{t:g}</text>')
    out.append(f'<text x="{_ML + _PLOT_W / 2:.2f}" y="{_SVG_H - 12}" '
               f'font-family="sans-serif" font-size="12" '
               f'text-anchor="middle">FP / N ratio</text>')
    ylab_y = _MT + _PLOT_H / 2
    out.append(f'<text x="16" y="{ylab_y:.2f}" font-family="sans-serif" '
               f'font-size="12" text-anchor="middle" '
               f'transform="rotate(-90 16 {ylab_y:.2f})">score</text>')

    legend_x = _ML + _PLOT_W + 14
    for idx, (metric, alpha) in enumerate(table.spec.series_keys()):
        color = _PALETTE[idx % len(_PALETTE)]
        pts = table.series(metric, alpha)
        if pts:
            coords = " ".join(f"{px(p.ratio):.2f},{py(p.score):.2f}" for p in pts)
            out.append(f'<polyline fill="none" stroke="{color}" '
                       f'stroke-width="1.5" points="{coords}"/>')
        ly = _MT + 14 + idx * 18
        out.append(f'<line x1="{legend_x}" y1="{ly - 4}" x2="{legend_x + 18}" '
                   f'y2="{ly - 4}" stroke="{color}" stroke-width="1.5"/>')
        out.append(f'<text x="{legend_x + 24}" y="{ly}" '
                   f'font-family="sans-serif" font-size="11">'
                   f'{_series_label(metric, alpha)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_sweep_svg(table: SweepTable, path) -> Path:
    path = Path(path)
    path.write_text(render_sweep_svg(table), encoding="utf-8")
    return path
