"""Mask model, loading/binarization, and directory pairing."""

import pytest
from conftest import (
    random_mask,
    write_gray_png,
    write_pgm_p2,
    write_pgm_p5,
    write_rgb_png,
)
from PIL import Image

from segscore.errors import DimensionMismatchError, PairingError, UnsupportedFormatError
from segscore.masks import (
    BinaryMask,
    MaskPair,
    PairPaths,
    load_mask,
    load_pair,
    pair_directories,
)


class TestBinaryMask:
    def test_holds_labels_row_major(self):
        m = BinaryMask(3, 2, bytes([0, 1, 0, 1, 1, 0]))
        assert m.pixel_count == 6
        assert m.foreground_count() == 3

    def test_from_flat_coerces_truthiness(self):
        m = BinaryMask.from_flat(2, 2, [0, 255, 0.0, True])
        assert m.labels == bytes([0, 1, 0, 1])

    def test_rejects_zero_area(self):
        with pytest.raises(ValueError, match="zero-area"):
            BinaryMask(0, 5, b"")

    def test_rejects_wrong_buffer_length(self):
        with pytest.raises(ValueError, match="expected 4"):
            BinaryMask(2, 2, bytes([0, 1, 0]))

    def test_rejects_nonbinary_labels(self):
        with pytest.raises(ValueError, match="only 0"):
            BinaryMask(2, 1, bytes([0, 2]))

    def test_complement_is_involutive(self, rng):
        m = random_mask(rng, 9, 7)
        flipped = m.complement()
        assert flipped.foreground_count() == m.pixel_count - m.foreground_count()
        assert flipped.complement() == m


class TestLoadMask:
    def test_default_threshold_marks_any_nonzero(self, tmp_path):
        p = tmp_path / "m.png"
        write_gray_png(p, 2, 2, [0, 255, 0, 128])
        assert load_mask(p).labels == bytes([0, 1, 0, 1])

    def test_threshold_cut(self, tmp_path):
        p = tmp_path / "m.png"
        write_gray_png(p, 2, 2, [0, 255, 0, 128])
        assert load_mask(p, threshold=200).labels == bytes([0, 1, 0, 0])

    def test_single_pixel(self, tmp_path):
        p = tmp_path / "m.png"
        write_gray_png(p, 1, 1, [0])
        assert load_mask(p).labels == bytes([0])

    def test_threshold_boundary_is_inclusive(self, tmp_path):
        # pixel value exactly at the threshold counts as foreground
        p = tmp_path / "m.png"
        write_gray_png(p, 3, 1, [99, 100, 101])
        assert load_mask(p, threshold=100).labels == bytes([0, 1, 1])

    def test_threshold_zero_marks_everything(self, tmp_path):
        p = tmp_path / "m.png"
        write_gray_png(p, 2, 1, [0, 7])
        assert load_mask(p, threshold=0).labels == bytes([1, 1])

    def test_rgb_reduces_by_max_channel(self, tmp_path):
        p = tmp_path / "m.png"
        write_rgb_png(p, 2, 2, [(0, 0, 0), (200, 0, 0), (0, 0, 3), (1, 2, 0)])
        assert load_mask(p, threshold=3).labels == bytes([0, 1, 1, 0])

    def test_binarization_is_idempotent(self, tmp_path, rng):
        src = random_mask(rng, 12, 8)
        p = tmp_path / "m.png"
        write_gray_png(p, 12, 8, (255 if v else 0 for v in src.labels))
        once = load_mask(p)
        assert once == src
        q = tmp_path / "again.png"
        write_gray_png(q, 12, 8, (255 if v else 0 for v in once.labels))
        assert load_mask(q) == once

    def test_binary_pgm_loads(self, tmp_path):
        p = tmp_path / "m.pgm"
        write_pgm_p5(p, 3, 1, [0, 255, 9])
        assert load_mask(p).labels == bytes([0, 1, 1])

    def test_ascii_pgm_rejected(self, tmp_path):
        p = tmp_path / "m.pgm"
        write_pgm_p2(p, 2, 1, [0, 255])
        with pytest.raises(UnsupportedFormatError, match="P5"):
            load_mask(p)

    def test_other_raster_format_rejected(self, tmp_path):
        p = tmp_path / "m.bmp"
        Image.frombytes("L", (2, 2), bytes([0, 255, 0, 255])).save(p, format="BMP")
        with pytest.raises(UnsupportedFormatError, match="BMP"):
            load_mask(p)

    def test_garbage_bytes_rejected(self, tmp_path):
        p = tmp_path / "m.png"
        p.write_bytes(b"not an image at all")
        with pytest.raises(UnsupportedFormatError, match="not a readable"):
            load_mask(p)

    def test_paletted_png_rejected(self, tmp_path):
        p = tmp_path / "m.png"
        img = Image.frombytes("L", (2, 2), bytes([0, 255, 0, 255])).convert("P")
        img.save(p, format="PNG")
        with pytest.raises(UnsupportedFormatError, match="mode"):
            load_mask(p)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_mask(tmp_path / "absent.png")

    @pytest.mark.parametrize("threshold", [-1, 256])
    def test_threshold_out_of_range(self, tmp_path, threshold):
        p = tmp_path / "m.png"
        write_gray_png(p, 1, 1, [0])
        with pytest.raises(ValueError, match=r"\[0, 255\]"):
            load_mask(p, threshold=threshold)


class TestMaskPair:
    def test_dimension_mismatch_names_id(self):
        a = BinaryMask(2, 2, bytes(4))
        b = BinaryMask(3, 2, bytes(6))
        with pytest.raises(DimensionMismatchError, match="case7.*2x2.*3x2"):
            MaskPair("case7", a, b)


def _fill_dir(directory, names, size=(2, 2), values=(0, 255, 0, 255)):
    directory.mkdir(exist_ok=True)
    for name in names:
        if name.endswith(".pgm"):
            write_pgm_p5(directory / name, size[0], size[1], values)
        else:
            write_gray_png(directory / name, size[0], size[1], values)


class TestPairDirectories:
    def test_full_match_sorted(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["b.png", "a.png"])
        _fill_dir(tmp_path / "pred", ["a.png", "b.png"])
        result = pair_directories(tmp_path / "gt", tmp_path / "pred")
        assert [p.id for p in result.pairs] == ["a", "b"]
        assert result.warnings == ()

    def test_partial_match_warns_both_sides(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png", "c.png"])
        _fill_dir(tmp_path / "pred", ["a.png", "b.png"])
        result = pair_directories(tmp_path / "gt", tmp_path / "pred")
        assert [p.id for p in result.pairs] == ["a"]
        assert any(w.startswith("c:") for w in result.warnings)
        assert any(w.startswith("b:") for w in result.warnings)

    def test_extension_insensitive_match(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png"])
        _fill_dir(tmp_path / "pred", ["a.pgm"])
        result = pair_directories(tmp_path / "gt", tmp_path / "pred")
        assert [p.id for p in result.pairs] == ["a"]
        pair = load_pair(result.pairs[0])
        assert pair.ground_truth == pair.prediction

    def test_no_shared_basenames(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png"])
        _fill_dir(tmp_path / "pred", ["b.png"])
        with pytest.raises(PairingError, match="no matching"):
            pair_directories(tmp_path / "gt", tmp_path / "pred")

    def test_ambiguous_basename_within_one_dir(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png", "a.pgm"])
        _fill_dir(tmp_path / "pred", ["a.png"])
        with pytest.raises(PairingError, match="ambiguous"):
            pair_directories(tmp_path / "gt", tmp_path / "pred")

    def test_dimension_mismatch_names_stem(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png"], size=(3, 3),
                  values=[0] * 9)
        _fill_dir(tmp_path / "pred", ["a.png"], size=(2, 2),
                  values=[0] * 4)
        with pytest.raises(DimensionMismatchError, match="a:.*3x3.*2x2"):
            pair_directories(tmp_path / "gt", tmp_path / "pred")

    def test_missing_directory(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png"])
        with pytest.raises(FileNotFoundError):
            pair_directories(tmp_path / "gt", tmp_path / "absent")

    def test_non_mask_files_ignored(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png"])
        _fill_dir(tmp_path / "pred", ["a.png"])
        (tmp_path / "gt" / "notes.txt").write_text("ignore me")
        result = pair_directories(tmp_path / "gt", tmp_path / "pred")
        assert [p.id for p in result.pairs] == ["a"]
        assert result.warnings == ()


class TestLoadPair:
    def test_loads_both_sides(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png"], values=(0, 255, 0, 0))
        _fill_dir(tmp_path / "pred", ["a.png"], values=(0, 255, 255, 0))
        pair = load_pair(PairPaths("a", tmp_path / "gt" / "a.png",
                                   tmp_path / "pred" / "a.png"))
        assert pair.ground_truth.labels == bytes([0, 1, 0, 0])
        assert pair.prediction.labels == bytes([0, 1, 1, 0])

    def test_threshold_applies_to_both(self, tmp_path):
        _fill_dir(tmp_path / "gt", ["a.png"], values=(0, 100, 200, 255))
        _fill_dir(tmp_path / "pred", ["a.png"], values=(0, 100, 200, 255))
        pair = load_pair(PairPaths("a", tmp_path / "gt" / "a.png",
                                   tmp_path / "pred" / "a.png"), threshold=150)
        assert pair.ground_truth.labels == bytes([0, 0, 1, 1])
        assert pair.prediction.labels == pair.ground_truth.labels
