"""Synthetic mask pairs covering the scoring edge cases.

Six square cases, named so lexicographic order matches the walk from
fully supervised to fully weak:

  a_perfect     gt rect, prediction identical
  b_partial     gt rect, prediction shifted by an eighth of the image
  c_miss        gt rect, prediction a disjoint rect of the same size
  d_weak_empty  empty gt, empty prediction
  e_weak_small  empty gt, small false-positive blob
  f_weak_large  empty gt, large false-positive blob

The three weak cases order strictly under the composite score
(d > e > f for any alpha), which is the property the suite exists to
pin down. generate_fixture_suite writes them as 8-bit {0, 255} PNGs in
gt/ and pred/ subdirectories, ready for the directory-pairing loader.
"""

from __future__ import annotations

from pathlib import Path

from PIL import Image

from segscore.masks import BinaryMask, MaskPair, PairPaths

MIN_FIXTURE_SIZE = 16
DEFAULT_FIXTURE_SIZE = 100

FIXTURE_IDS = ("a_perfect", "b_partial", "c_miss",
               "d_weak_empty", "e_weak_small", "f_weak_large")

# label byte 1 -> gray 255, label byte 0 stays 0
_TO_GRAY = bytes((255 if v else 0) for v in range(256))


def _rect_mask(size: int, x: int, y: int, w: int, h: int) -> BinaryMask:
    labels = bytearray(size * size)
    for row in range(y, y + h):
        start = row * size + x
        labels[start:start + w] = b"\x01" * w
    return BinaryMask(size, size, bytes(labels))


def fixture_masks(size: int = DEFAULT_FIXTURE_SIZE) -> tuple[MaskPair, ...]:
    """Build the six fixture pairs in memory, in id order."""
    if size < MIN_FIXTURE_SIZE:
        raise ValueError(
            f"fixture size must be at least {MIN_FIXTURE_SIZE}, got {size}")
    q, e, h = size // 4, size // 8, size // 2
    empty = _rect_mask(size, 0, 0, 0, 0)
    gt_rect = _rect_mask(size, q, q, h, h)
    cases = (
        ("a_perfect", gt_rect, _rect_mask(size, q, q, h, h)),
        ("b_partial", gt_rect, _rect_mask(size, q + e, q + e, h, h)),
        ("c_miss", _rect_mask(size, e, e, q, q),
         _rect_mask(size, h + e, h + e, q, q)),
        ("d_weak_empty", empty, empty),
        ("e_weak_small", empty, _rect_mask(size, q, q, e, e)),
        ("f_weak_large", empty, _rect_mask(size, e, e, h, h)),
    )
    return tuple(MaskPair(name, gt, pred) for name, gt, pred in cases)


def _save_png(mask: BinaryMask, path: Path):
    img = Image.frombytes("L", (mask.width, mask.height),
                          mask.labels.translate(_TO_GRAY))
    img.save(path, format="PNG")


def generate_fixture_suite(out_dir,
                           size: int = DEFAULT_FIXTURE_SIZE) -> tuple[PairPaths, ...]:
    """Write the fixture suite to disk; returns the path pairs written."""
    out_dir = Path(out_dir)
    gt_dir = out_dir / "gt"
    pred_dir = out_dir / "pred"
    gt_dir.mkdir(parents=True, exist_ok=True)
    pred_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for pair in fixture_masks(size):
        gt_path = gt_dir / f"{pair.id}.png"
        pred_path = pred_dir / f"{pair.id}.png"
        _save_png(pair.ground_truth, gt_path)
        _save_png(pair.prediction, pred_path)
        written.append(PairPaths(pair.id, gt_path, pred_path))
    return tuple(written)
