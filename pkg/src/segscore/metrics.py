"""Scalar scores computed from a confusion matrix.

Every function returns a MetricScore in [0, 1] or, where a metric's
expression has a zero denominator (a "definition gap"), a score resolved
per MetricConfig.undefined_policy: scored as 0.0 with `from_undefined`
set, or kept as a distinguished undefined value.

The composite `mism` score never hits a gap on nonempty masks: it equals
the dice overlap whenever the ground truth contains foreground (P > 0),
and the weighted specificity otherwise. In the P > 0 case the dice
denominator is at least P; in the P = 0 case the weighted denominator
spans every pixel of the image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

from segscore.confusion import ConfusionMatrix
from segscore.errors import UnknownMetricError

# canonical identifier order; selections are reported in this order
METRIC_IDS = ("dsc", "fpr", "spec", "wspec", "acc", "nmcc", "mism")

# metrics whose value depends on the weighting coefficient alpha
ALPHA_METRICS = frozenset({"wspec", "mism"})

DEFAULT_ALPHA = 0.1

UndefinedPolicy = Literal["score_zero", "propagate_undefined"]


@dataclass(frozen=True)
class MetricConfig:
    """Evaluation knobs: the weighting coefficient and gap handling.

    alpha weighs true negatives against false positives in the weighted
    specificity; the endpoints are rejected because alpha = 0 pins the
    score to 0 for any FP > 0 and alpha = 1 pins it to 1 for any TN > 0,
    which destroys the scoring gradient the weight exists to provide.
    """

    alpha: float = DEFAULT_ALPHA
    undefined_policy: UndefinedPolicy = "score_zero"

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(
                f"alpha must lie in the open interval (0, 1), got {self.alpha}")
        if self.undefined_policy not in ("score_zero", "propagate_undefined"):
            raise ValueError(f"unknown undefined policy {self.undefined_policy!r}")


DEFAULT_CONFIG = MetricConfig()


@dataclass(frozen=True)
class MetricScore:
    """One metric's score for one confusion matrix.

    value None is the distinguished undefined state (only produced under
    the propagate_undefined policy, and by fpr, which takes no policy).
    from_undefined marks scores that came out of a definition gap, so a
    policy-resolved 0.0 stays distinguishable from a computed 0.0.
    """

    metric: str
    value: float | None
    from_undefined: bool = False

    @property
    def defined(self) -> bool:
        return self.value is not None


def _gap(metric: str, cfg: MetricConfig) -> MetricScore:
    if cfg.undefined_policy == "score_zero":
        return MetricScore(metric, 0.0, from_undefined=True)
    return MetricScore(metric, None, from_undefined=True)


def dsc(m: ConfusionMatrix, cfg: MetricConfig = DEFAULT_CONFIG) -> MetricScore:
    """Dice overlap 2*TP / (2*TP + FP + FN); gap when all three are zero."""
    denom = 2 * m.tp + m.fp + m.fn
    if denom == 0:
        return _gap("dsc", cfg)
    return MetricScore("dsc", (2 * m.tp) / denom)


def fpr(m: ConfusionMatrix) -> MetricScore:
    """Fall-out FP / (FP + TN); undefined when there are no actual negatives."""
    if m.n == 0:
        return MetricScore("fpr", None, from_undefined=True)
    return MetricScore("fpr", m.fp / m.n)


def specificity(m: ConfusionMatrix, cfg: MetricConfig = DEFAULT_CONFIG) -> MetricScore:
    """True negative rate TN / (FP + TN); gap when N = 0."""
    if m.n == 0:
        return _gap("spec", cfg)
    return MetricScore("spec", m.tn / m.n)


def weighted_specificity(m: ConfusionMatrix, cfg: MetricConfig = DEFAULT_CONFIG) -> MetricScore:
    """Specificity with FP and TN reweighted by (1 - alpha) and alpha.

    alpha * TN / ((1 - alpha) * FP + alpha * TN). Down-weighting TN
    sharpens the penalty for false positives relative to plain
    specificity, whose huge TN counts otherwise drown them out.
    """
    if m.n == 0:
        return _gap("wspec", cfg)
    weighted_tn = cfg.alpha * m.tn
    return MetricScore("wspec", weighted_tn / ((1.0 - cfg.alpha) * m.fp + weighted_tn))


def accuracy(m: ConfusionMatrix) -> MetricScore:
    """(TP + TN) / total; defined for every nonempty matrix."""
    return MetricScore("acc", (m.tp + m.tn) / m.total)


def nmcc(m: ConfusionMatrix) -> MetricScore:
    """Matthews correlation rescaled to [0, 1] via (MCC + 1) / 2.

    MCC = (TP*TN - FP*FN) / sqrt((TP+FP)(TP+FN)(TN+FP)(TN+FN)), taken as 0
    when any denominator factor vanishes, the standard convention; chance
    agreement and every degenerate prediction then land on 0.5. Perfect
    squares go through an exact integer square root so perfect predictions
    score exactly 1.0.
    """
    prod = (m.tp + m.fp) * (m.tp + m.fn) * (m.tn + m.fp) * (m.tn + m.fn)
    if prod == 0:
        mcc = 0.0
    else:
        num = m.tp * m.tn - m.fp * m.fn
        root = math.isqrt(prod)
        denom = float(root) if root * root == prod else math.sqrt(prod)
        mcc = num / denom
    return MetricScore("nmcc", (mcc + 1.0) / 2.0)


def mism(m: ConfusionMatrix, cfg: MetricConfig = DEFAULT_CONFIG) -> MetricScore:
    """Composite score: dice overlap when P > 0, weighted specificity when P = 0.

    Shares the code paths of dsc and weighted_specificity, so the P > 0
    branch reproduces the dice value bit for bit. Never undefined on
    nonempty masks.
    """
    branch = dsc(m, cfg) if m.p > 0 else weighted_specificity(m, cfg)
    return MetricScore("mism", branch.value, branch.from_undefined)


_DISPATCH = {
    "dsc": lambda m, cfg: dsc(m, cfg),
    "fpr": lambda m, cfg: fpr(m),
    "spec": lambda m, cfg: specificity(m, cfg),
    "wspec": lambda m, cfg: weighted_specificity(m, cfg),
    "acc": lambda m, cfg: accuracy(m),
    "nmcc": lambda m, cfg: nmcc(m),
    "mism": lambda m, cfg: mism(m, cfg),
}


def canonical_selection(selection: Iterable[str]) -> tuple[str, ...]:
    """Validate metric identifiers and return them in canonical order."""
    chosen = set(selection)
    if not chosen:
        raise UnknownMetricError("empty metric selection")
    unknown = chosen - set(METRIC_IDS)
    if unknown:
        raise UnknownMetricError(
            f"unknown metrics: {', '.join(sorted(unknown))} "
            f"(valid: {', '.join(METRIC_IDS)})")
    return tuple(name for name in METRIC_IDS if name in chosen)


def evaluate_metric(name: str,
                    m: ConfusionMatrix,
                    cfg: MetricConfig = DEFAULT_CONFIG) -> MetricScore:
    """Evaluate a single metric by identifier."""
    if name not in _DISPATCH:
        raise UnknownMetricError(
            f"unknown metrics: {name} (valid: {', '.join(METRIC_IDS)})")
    return _DISPATCH[name](m, cfg)


def evaluate_all(m: ConfusionMatrix,
                 cfg: MetricConfig = DEFAULT_CONFIG,
                 selection: Iterable[str] = METRIC_IDS) -> dict[str, MetricScore]:
    """Evaluate the selected metrics, keyed and ordered canonically.

    Each metric is scored independently; an undefined score for one never
    suppresses the others.
    """
    return {name: _DISPATCH[name](m, cfg) for name in canonical_selection(selection)}
