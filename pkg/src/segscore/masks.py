"""Binary mask loading, binarization, and ground-truth/prediction pairing.

Masks come from 8-bit grayscale or RGB PNG files, or binary (P5) PGM files.
A pixel is foreground when its value is at least the threshold; the default
threshold of 1 marks any nonzero pixel as foreground, which matches the
usual convention of storing background as 0. RGB inputs are reduced to one
channel by taking the per-pixel maximum before thresholding, so foreground
survives any single-channel color encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from PIL import Image, ImageChops, UnidentifiedImageError

from segscore.errors import DimensionMismatchError, PairingError, UnsupportedFormatError

DEFAULT_THRESHOLD = 1

_MASK_SUFFIXES = (".png", ".pgm")

# labels contain only 0/1; entries past index 1 are never hit
_FLIP_LUT = bytes([1, 0]) + bytes(range(2, 256))


@dataclass(frozen=True)
class BinaryMask:
    """A width x height grid of labels, row-major, 1 = foreground, 0 = background.

    Immutable after construction and safe to share across threads.
    """

    width: int
    height: int
    labels: bytes

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"zero-area mask: {self.width}x{self.height}")
        expected = self.width * self.height
        if len(self.labels) != expected:
            raise ValueError(
                f"label buffer holds {len(self.labels)} pixels, expected {expected}")
        if set(self.labels) - {0, 1}:
            raise ValueError("labels must contain only 0 (background) and 1 (foreground)")

    @classmethod
    def from_flat(cls, width: int, height: int, values: Iterable) -> "BinaryMask":
        """Build a mask from any iterable of truthy/falsy pixel values."""
        return cls(width, height, bytes(1 if v else 0 for v in values))

    @property
    def pixel_count(self) -> int:
        return self.width * self.height

    def foreground_count(self) -> int:
        return self.labels.count(1)

    def complement(self) -> "BinaryMask":
        """The same grid with foreground and background swapped."""
        return BinaryMask(self.width, self.height, self.labels.translate(_FLIP_LUT))


@dataclass(frozen=True)
class MaskPair:
    """A loaded ground-truth/prediction pair sharing one basename id."""

    id: str
    ground_truth: BinaryMask
    prediction: BinaryMask

    def __post_init__(self):
        gt, pred = self.ground_truth, self.prediction
        if (gt.width, gt.height) != (pred.width, pred.height):
            raise DimensionMismatchError(
                f"{self.id}: ground truth is {gt.width}x{gt.height}, "
                f"prediction is {pred.width}x{pred.height}")


@dataclass(frozen=True)
class PairPaths:
    """Matched ground-truth/prediction files, not yet loaded."""

    id: str
    gt_path: Path
    pred_path: Path


@dataclass(frozen=True)
class PairingResult:
    pairs: tuple[PairPaths, ...]
    warnings: tuple[str, ...]


def load_mask(path, threshold: int = DEFAULT_THRESHOLD) -> BinaryMask:
    """Load a PNG or binary PGM image and binarize it.

    Pixels with value >= threshold become foreground. RGB images are
    reduced by the per-pixel channel maximum first.

    Raises:
        FileNotFoundError: path does not name a file.
        UnsupportedFormatError: not a PNG/P5-PGM, or a pixel mode other
            than 8-bit grayscale or RGB.
        ValueError: threshold outside [0, 255], or a zero-area image.
    """
    path = Path(path)
    if not 0 <= threshold <= 255:
        raise ValueError(f"threshold must be in [0, 255], got {threshold}")
    if not path.is_file():
        raise FileNotFoundError(f"no such mask file: {path}")
    try:
        with Image.open(path) as im:
            if im.format == "PPM":
                with path.open("rb") as fh:
                    magic = fh.read(2)
                if magic != b"P5":
                    raise UnsupportedFormatError(
                        f"{path}: only binary (P5) PGM is supported")
            elif im.format != "PNG":
                raise UnsupportedFormatError(
                    f"{path}: unsupported format {im.format!r} (PNG or P5 PGM only)")
            if im.mode == "RGB":
                r, g, b = im.split()
                gray = ImageChops.lighter(ImageChops.lighter(r, g), b)
            elif im.mode == "L":
                gray = im
            else:
                raise UnsupportedFormatError(
                    f"{path}: unsupported pixel mode {im.mode!r} "
                    "(8-bit grayscale or RGB only)")
            width, height = gray.size
            if width < 1 or height < 1:
                raise ValueError(f"{path}: zero-area image {width}x{height}")
            lut = [1 if v >= threshold else 0 for v in range(256)]
            labels = gray.point(lut).tobytes()
    except UnidentifiedImageError as exc:
        raise UnsupportedFormatError(f"{path}: not a readable raster image") from exc
    return BinaryMask(width, height, labels)


def load_pair(paths: PairPaths, threshold: int = DEFAULT_THRESHOLD) -> MaskPair:
    """Load both sides of a matched pair; dimensions must agree."""
    gt = load_mask(paths.gt_path, threshold)
    pred = load_mask(paths.pred_path, threshold)
    return MaskPair(paths.id, gt, pred)


def pair_directories(gt_dir, pred_dir) -> PairingResult:
    """Match mask files across two directories by basename.

    Files pair up when their basenames agree after stripping the extension,
    so gt/a.png matches pred/a.pgm. Pairs come back sorted by basename.
    Files present on one side only are listed in `warnings` rather than
    silently dropped. Matched files must agree on image dimensions (checked
    from the image headers, without decoding pixels).

    Raises:
        FileNotFoundError: either directory is missing.
        PairingError: no basename appears on both sides, or one directory
            holds two files with the same basename.
        DimensionMismatchError: a matched pair disagrees on dimensions.
    """
    gt_dir, pred_dir = Path(gt_dir), Path(pred_dir)
    for d in (gt_dir, pred_dir):
        if not d.is_dir():
            raise FileNotFoundError(f"not a directory: {d}")
    gt_files = _scan_masks(gt_dir)
    pred_files = _scan_masks(pred_dir)
    shared = sorted(gt_files.keys() & pred_files.keys())
    if not shared:
        raise PairingError(f"no matching basenames between {gt_dir} and {pred_dir}")
    warnings = []
    for stem in sorted(gt_files.keys() - pred_files.keys()):
        warnings.append(f"{stem}: ground truth has no matching prediction")
    for stem in sorted(pred_files.keys() - gt_files.keys()):
        warnings.append(f"{stem}: prediction has no matching ground truth")
    pairs = []
    for stem in shared:
        gt_path, pred_path = gt_files[stem], pred_files[stem]
        gt_size = _header_size(gt_path)
        pred_size = _header_size(pred_path)
        # unreadable headers (None) are left for load time, where the
        # batch harness can fail soft on them pair by pair
        if gt_size and pred_size and gt_size != pred_size:
            raise DimensionMismatchError(
                f"{stem}: ground truth is {gt_size[0]}x{gt_size[1]}, "
                f"prediction is {pred_size[0]}x{pred_size[1]}")
        pairs.append(PairPaths(stem, gt_path, pred_path))
    return PairingResult(tuple(pairs), tuple(warnings))


def _scan_masks(directory: Path) -> dict[str, Path]:
    found = {}
    for p in sorted(directory.iterdir()):
        if not (p.is_file() and p.suffix.lower() in _MASK_SUFFIXES):
            continue
        if p.stem in found:
            raise PairingError(
                f"{directory}: ambiguous basename {p.stem!r} "
                f"({found[p.stem].name} and {p.name})")
        found[p.stem] = p
    return found


def _header_size(path: Path) -> tuple[int, int] | None:
    try:
        with Image.open(path) as im:
            return im.size
    except (UnidentifiedImageError, OSError):
        return None
