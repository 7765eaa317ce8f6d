"""Binary confusion matrix for mask pairs: the single source for every metric.

The counting kernel is chosen at import time: the compiled extension when it
was built, otherwise the pure-Python fallback. Both honor the same contract
and the test suite equates each against a naive per-pixel loop, which is the
reference definition of the counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from segscore.errors import DimensionMismatchError
from segscore.masks import BinaryMask

try:
    from segscore._counts import count_confusion as _count_confusion
    KERNEL_BACKEND = "compiled"
except ImportError:
    from segscore._counts_py import count_confusion as _count_confusion
    KERNEL_BACKEND = "python"


@dataclass(frozen=True)
class ConfusionMatrix:
    """Exact integer pixel counts; aggregation over them is order-independent.

    P (actual positives) and N (actual negatives) are derived, not stored.
    """

    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self):
        for name in ("tp", "fp", "tn", "fn"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
        if self.total == 0:
            raise ValueError("empty confusion matrix (all four counts are zero)")

    @property
    def p(self) -> int:
        """Actual positive pixels: tp + fn."""
        return self.tp + self.fn

    @property
    def n(self) -> int:
        """Actual negative pixels: fp + tn."""
        return self.fp + self.tn

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


def confusion_matrix(gt: BinaryMask, pred: BinaryMask) -> ConfusionMatrix:
    """Count per-pixel agreement between a ground-truth and a predicted mask."""
    if (gt.width, gt.height) != (pred.width, pred.height):
        raise DimensionMismatchError(
            f"ground truth is {gt.width}x{gt.height}, "
            f"prediction is {pred.width}x{pred.height}")
    tp, fp, tn, fn = _count_confusion(gt.labels, pred.labels)
    return ConfusionMatrix(tp=tp, fp=fp, tn=tn, fn=fn)
