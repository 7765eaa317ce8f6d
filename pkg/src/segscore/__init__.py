"""Confusion-matrix scoring for binary segmentation masks.

Loads masks from PNG or binary PGM, counts the confusion matrix with a
compiled kernel (pure-Python fallback when the extension is absent), and
scores it with overlap, error-rate, and weak-label-safe composite
metrics. Ships a batch harness with CSV/JSON reports, an edge-case sweep
plotter, a synthetic fixture suite, and the `segscore` command.
"""

from segscore.confusion import KERNEL_BACKEND, ConfusionMatrix, confusion_matrix
from segscore.errors import (
    DimensionMismatchError,
    PairingError,
    SegScoreError,
    UnknownMetricError,
    UnsupportedFormatError,
)
from segscore.fixtures import fixture_masks, generate_fixture_suite
from segscore.masks import (
    BinaryMask,
    MaskPair,
    PairPaths,
    load_mask,
    load_pair,
    pair_directories,
)
from segscore.metrics import (
    ALPHA_METRICS,
    DEFAULT_ALPHA,
    METRIC_IDS,
    MetricConfig,
    MetricScore,
    accuracy,
    canonical_selection,
    dsc,
    evaluate_all,
    evaluate_metric,
    fpr,
    mism,
    nmcc,
    specificity,
    weighted_specificity,
)
from segscore.report import (
    BatchError,
    EvalRecord,
    EvalReport,
    MetricAggregate,
    emit_report,
    evaluate_batch,
    render_report,
)
from segscore.sweep import (
    SweepPoint,
    SweepSpec,
    SweepTable,
    emit_sweep_csv,
    emit_sweep_svg,
    render_sweep_csv,
    render_sweep_svg,
    run_sweep,
)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which confusion-count kernel is active: "compiled" or "python"."""
    return KERNEL_BACKEND


__all__ = [
    "ALPHA_METRICS",
    "BatchError",
    "BinaryMask",
    "ConfusionMatrix",
    "DEFAULT_ALPHA",
    "DimensionMismatchError",
    "EvalRecord",
    "EvalReport",
    "KERNEL_BACKEND",
    "MaskPair",
    "METRIC_IDS",
    "MetricAggregate",
    "MetricConfig",
    "MetricScore",
    "PairPaths",
    "PairingError",
    "SegScoreError",
    "SweepPoint",
    "SweepSpec",
    "SweepTable",
    "UnknownMetricError",
    "UnsupportedFormatError",
    "accuracy",
    "canonical_selection",
    "confusion_matrix",
    "dsc",
    "emit_report",
    "emit_sweep_csv",
    "emit_sweep_svg",
    "evaluate_all",
    "evaluate_batch",
    "evaluate_metric",
    "fixture_masks",
    "fpr",
    "generate_fixture_suite",
    "kernel_backend",
    "load_mask",
    "load_pair",
    "mism",
    "nmcc",
    "pair_directories",
    "render_report",
    "render_sweep_csv",
    "render_sweep_svg",
    "run_sweep",
    "specificity",
    "weighted_specificity",
    "__version__",
]
