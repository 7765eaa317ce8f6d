"""Synthetic fixture suite: geometry, scores, and on-disk round-trip."""

import pytest
from conftest import naive_counts

from segscore.confusion import confusion_matrix
from segscore.fixtures import (
    DEFAULT_FIXTURE_SIZE,
    FIXTURE_IDS,
    MIN_FIXTURE_SIZE,
    fixture_masks,
    generate_fixture_suite,
)
from segscore.masks import load_pair, pair_directories
from segscore.metrics import MetricConfig, evaluate_all
from segscore.report import evaluate_batch


def by_id(size=DEFAULT_FIXTURE_SIZE):
    return {pair.id: pair for pair in fixture_masks(size)}


class TestGeometry:
    def test_six_cases_in_order(self):
        assert tuple(p.id for p in fixture_masks()) == FIXTURE_IDS

    @pytest.mark.parametrize("size", [MIN_FIXTURE_SIZE, 48, 100])
    def test_all_masks_are_square(self, size):
        for pair in fixture_masks(size):
            for mask in (pair.ground_truth, pair.prediction):
                assert (mask.width, mask.height) == (size, size)

    def test_too_small_rejected(self):
        with pytest.raises(ValueError, match="at least 16"):
            fixture_masks(15)

    def test_perfect_case_counts(self):
        pair = by_id(48)["a_perfect"]
        m = confusion_matrix(pair.ground_truth, pair.prediction)
        assert (m.tp, m.fp, m.fn) == (24 * 24, 0, 0)
        assert m.tn == 48 * 48 - 24 * 24

    def test_partial_case_overlaps_but_misses(self):
        pair = by_id(48)["b_partial"]
        m = confusion_matrix(pair.ground_truth, pair.prediction)
        assert m.tp == (24 - 6) * (24 - 6)
        assert m.fp == 24 * 24 - m.tp
        assert m.fn == m.fp
        assert (m.tp, m.fp, m.tn, m.fn) == naive_counts(pair.ground_truth,
                                                        pair.prediction)

    def test_miss_case_is_disjoint(self):
        pair = by_id(48)["c_miss"]
        m = confusion_matrix(pair.ground_truth, pair.prediction)
        assert m.tp == 0
        assert m.fp == 12 * 12
        assert m.fn == 12 * 12

    def test_weak_cases_have_empty_ground_truth(self):
        pairs = by_id(48)
        fp_by_case = {}
        for case in ("d_weak_empty", "e_weak_small", "f_weak_large"):
            m = confusion_matrix(pairs[case].ground_truth, pairs[case].prediction)
            assert m.p == 0
            fp_by_case[case] = m.fp
        assert fp_by_case["d_weak_empty"] == 0
        assert 0 < fp_by_case["e_weak_small"] < fp_by_case["f_weak_large"]

    def test_geometry_deterministic_from_size(self):
        assert fixture_masks(64) == fixture_masks(64)


class TestFixtureScores:
    def test_perfect_case_scores_one(self):
        pair = by_id()["a_perfect"]
        scores = evaluate_all(confusion_matrix(pair.ground_truth, pair.prediction))
        assert scores["dsc"].value == 1.0
        assert scores["mism"].value == 1.0

    def test_empty_case_scores(self):
        pair = by_id()["d_weak_empty"]
        m = confusion_matrix(pair.ground_truth, pair.prediction)
        zero = evaluate_all(m, MetricConfig(undefined_policy="score_zero"))
        assert zero["mism"].value == 1.0
        assert zero["dsc"].value == 0.0 and zero["dsc"].from_undefined
        assert zero["nmcc"].value == 0.5
        propagated = evaluate_all(m, MetricConfig(undefined_policy="propagate_undefined"))
        assert propagated["dsc"].value is None
        assert propagated["mism"].value == 1.0

    @pytest.mark.parametrize("alpha", [0.05, 0.1, 0.25, 0.5, 0.9])
    def test_weak_cases_order_strictly(self, alpha):
        pairs = by_id()
        cfg = MetricConfig(alpha=alpha)
        values = []
        for case in ("d_weak_empty", "e_weak_small", "f_weak_large"):
            m = confusion_matrix(pairs[case].ground_truth, pairs[case].prediction)
            values.append(evaluate_all(m, cfg)["mism"].value)
        assert values[0] > values[1] > values[2] > 0

    def test_overlap_score_cannot_separate_weak_cases(self):
        pairs = by_id()
        values = set()
        for case in ("d_weak_empty", "e_weak_small", "f_weak_large"):
            m = confusion_matrix(pairs[case].ground_truth, pairs[case].prediction)
            values.add(evaluate_all(m)["dsc"].value)
        assert values == {0.0}


class TestSuiteOnDisk:
    def test_writes_twelve_pngs(self, tmp_path):
        written = generate_fixture_suite(tmp_path / "suite")
        assert len(written) == 6
        gt_files = sorted(p.name for p in (tmp_path / "suite" / "gt").iterdir())
        pred_files = sorted(p.name for p in (tmp_path / "suite" / "pred").iterdir())
        expected = sorted(f"{case}.png" for case in FIXTURE_IDS)
        assert gt_files == expected
        assert pred_files == expected

    def test_round_trips_through_the_loader(self, tmp_path):
        written = generate_fixture_suite(tmp_path / "suite", size=32)
        in_memory = {p.id: p for p in fixture_masks(32)}
        for paths in written:
            loaded = load_pair(paths)
            assert loaded.ground_truth == in_memory[paths.id].ground_truth
            assert loaded.prediction == in_memory[paths.id].prediction

    def test_two_runs_are_byte_identical(self, tmp_path):
        first = generate_fixture_suite(tmp_path / "one", size=24)
        second = generate_fixture_suite(tmp_path / "two", size=24)
        for a, b in zip(first, second):
            assert a.gt_path.read_bytes() == b.gt_path.read_bytes()
            assert a.pred_path.read_bytes() == b.pred_path.read_bytes()

    def test_pairs_with_the_directory_scanner(self, tmp_path):
        generate_fixture_suite(tmp_path / "suite", size=20)
        pairing = pair_directories(tmp_path / "suite" / "gt",
                                   tmp_path / "suite" / "pred")
        report = evaluate_batch(pairing.pairs)
        assert [r.id for r in report.records] == list(FIXTURE_IDS)
        assert not report.errors
        assert sum(1 for r in report.records if r.weak_label) == 3
