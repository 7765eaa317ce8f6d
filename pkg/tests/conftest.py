"""Shared test helpers: a per-pixel counting oracle and tiny image writers.

naive_counts is the reference definition of the confusion matrix: one
branch per pixel, no packing, no shortcuts. Every counting path in the
package is equated against it.
"""

import random

import pytest
from PIL import Image

from segscore.masks import BinaryMask


def naive_counts(gt: BinaryMask, pred: BinaryMask) -> tuple[int, int, int, int]:
    assert (gt.width, gt.height) == (pred.width, pred.height)
    tp = fp = tn = fn = 0
    for y in range(gt.height):
        for x in range(gt.width):
            g = gt.labels[y * gt.width + x]
            p = pred.labels[y * pred.width + x]
            if g == 1 and p == 1:
                tp += 1
            elif g == 0 and p == 1:
                fp += 1
            elif g == 1 and p == 0:
                fn += 1
            else:
                tn += 1
    return tp, fp, tn, fn


def random_mask(rng: random.Random, width: int, height: int,
                density: float = 0.5) -> BinaryMask:
    labels = bytes(1 if rng.random() < density else 0
                   for _ in range(width * height))
    return BinaryMask(width, height, labels)


def write_gray_png(path, width, height, values):
    """values: flat iterable of 0-255 grays, row-major."""
    img = Image.frombytes("L", (width, height), bytes(values))
    img.save(path, format="PNG")


def write_rgb_png(path, width, height, pixels):
    """pixels: flat iterable of (r, g, b) tuples, row-major."""
    img = Image.new("RGB", (width, height))
    img.putdata(list(pixels))
    img.save(path, format="PNG")


def write_pgm_p5(path, width, height, values, maxval=255):
    header = f"P5\n{width} {height}\n{maxval}\n".encode("ascii")
    path.write_bytes(header + bytes(values))


def write_pgm_p2(path, width, height, values, maxval=255):
    # ASCII variant; the loader must refuse it
    body = " ".join(str(v) for v in values)
    path.write_text(f"P2\n{width} {height}\n{maxval}\n{body}\n", encoding="ascii")


@pytest.fixture
def rng():
    return random.Random(20260818)
