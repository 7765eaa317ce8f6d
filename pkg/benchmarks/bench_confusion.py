"""Compare the confusion-count kernels on one pair of random label buffers.

Three routes to the same four integers: the naive per-pixel Python loop
(the reference definition), the packed pure-Python fallback, and the
compiled extension when it is installed. Each kernel is checked against
the naive counts before timing.

Run from the repository root:

    python benchmarks/bench_confusion.py --pixels 1000000 --repeat 5
"""

import argparse
import random
import time

from segscore import _counts_py
from segscore.confusion import KERNEL_BACKEND

try:
    from segscore._counts import count_confusion as compiled_kernel
except ImportError:
    compiled_kernel = None

# map arbitrary random bytes onto valid 0/1 labels
_TO_BITS = bytes(v & 1 for v in range(256))


def naive_kernel(gt, pred):
    tp = fp = tn = fn = 0
    for g, p in zip(gt, pred):
        if g:
            if p:
                tp += 1
            else:
                fn += 1
        elif p:
            fp += 1
        else:
            tn += 1
    return tp, fp, tn, fn


def best_of(kernel, gt, pred, repeat):
    timings = []
    for _ in range(repeat):
        start = time.perf_counter()
        kernel(gt, pred)
        timings.append(time.perf_counter() - start)
    return min(timings)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pixels", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    gt = rng.randbytes(args.pixels).translate(_TO_BITS)
    pred = rng.randbytes(args.pixels).translate(_TO_BITS)

    kernels = [
        ("naive per-pixel loop", naive_kernel),
        ("packed python fallback", _counts_py.count_confusion),
    ]
    if compiled_kernel is not None:
        kernels.append(("compiled extension", compiled_kernel))

    reference = naive_kernel(gt, pred)
    print(f"pixels: {args.pixels:,}   repeat: {args.repeat}   "
          f"active backend: {KERNEL_BACKEND}")
    print(f"counts (tp, fp, tn, fn): {reference}")
    print()
    print(f"{'kernel':<24} {'best time':>12} {'pixels/s':>14} {'speedup':>9}")
    baseline = None
    for name, kernel in kernels:
        assert kernel(gt, pred) == reference, f"{name} disagrees with the loop"
        elapsed = best_of(kernel, gt, pred, args.repeat)
        baseline = baseline or elapsed
        print(f"{name:<24} {elapsed * 1000:>10.2f}ms {args.pixels / elapsed:>14,.0f}"
              f" {baseline / elapsed:>8.1f}x")
    if compiled_kernel is None:
        print("\ncompiled extension not installed; showing fallback only")


if __name__ == "__main__":
    main()
