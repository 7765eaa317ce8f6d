"""Pure-Python confusion-count kernel.

Packs the 0/1 label buffers into big integers so the per-pixel work runs in
CPython's C loops rather than a Python-level loop: each byte holds 0 or 1,
so ANDing the packed integers leaves one set bit per true positive, and the
popcounts of gt, pred, and their AND fix all four cells.
"""


def count_confusion(gt: bytes, pred: bytes) -> tuple[int, int, int, int]:
    """Count (tp, fp, tn, fn) between two equal-length 0/1 label buffers."""
    if len(gt) != len(pred):
        raise ValueError(f"label buffers differ in length: {len(gt)} vs {len(pred)}")
    g = int.from_bytes(gt, "big")
    p = int.from_bytes(pred, "big")
    tp = (g & p).bit_count()
    fp = p.bit_count() - tp
    fn = g.bit_count() - tp
    tn = len(gt) - tp - fp - fn
    return tp, fp, tn, fn
