import unittest

import numpy as np

from digit_ecc.analysis_oracles import (
    SweepStats,
    check_matrix_of,
    codec_syndrome,
    error_sweep,
    min_distance_column_search,
    min_weight_enumeration,
    pattern_count,
    sweep_codewords,
)
from digit_ecc.code_model import Codeword
from digit_ecc.digit_arith import DigitVec
from digit_ecc.errors import BudgetError
from digit_ecc.families import build_spec, codec_for
from digit_ecc.prototype_codec import weight3_codeword


def _specs():
    return [
        build_spec("prototype", p=3, r=2),
        build_spec("prototype", p=5, r=2),
        build_spec("a1", r=3),
        build_spec("a1", message_len=11),
        build_spec("a2", r=4),
        build_spec("a2", r=4, message_len=15),
        build_spec("a2sparse", r=4),
        build_spec("a2sparse", r=4, global_check=True),
        build_spec("golay"),
    ]


class CheckMatrixTests(unittest.TestCase):
    def test_shapes(self):
        self.assertEqual(check_matrix_of(build_spec("prototype", p=3, r=3)).shape, (4, 27))
        self.assertEqual(check_matrix_of(build_spec("a2", r=4)).shape, (6, 22))
        self.assertEqual(check_matrix_of(build_spec("golay")).shape, (5, 11))
        self.assertEqual(check_matrix_of(build_spec("a2sparse", r=4, global_check=True)).shape, (5, 11))

    def test_matrix_syndromes_match_codec_syndromes(self):
        rng = np.random.default_rng(99)
        for spec in _specs():
            matrix = check_matrix_of(spec)
            for _ in range(1000):
                word = Codeword(spec, tuple(int(v) for v in rng.integers(0, spec.base, size=spec.n_block)))
                self.assertEqual(matrix.syndrome(word.symbols), codec_syndrome(spec, word), spec.label)

    def test_codewords_are_in_the_null_space(self):
        rng = np.random.default_rng(4)
        for spec in _specs():
            codec = codec_for(spec)
            matrix = check_matrix_of(spec)
            for _ in range(20):
                self.assertTrue(matrix.is_codeword(codec.encode(codec.random_message(rng)).symbols))


class DistanceOracleTests(unittest.TestCase):
    def test_prototype_r3_has_distance_three(self):
        spec = build_spec("prototype", p=3, r=3)
        matrix = check_matrix_of(spec)
        self.assertIsNone(min_distance_column_search(matrix, 2).first_dependency)
        verdict = min_distance_column_search(matrix, 3)
        self.assertEqual(verdict.first_dependency, 3)
        witness = verdict.witness(spec)
        self.assertEqual(witness.weight(), 3)
        self.assertTrue(matrix.is_codeword(witness.symbols))
        self.assertTrue(matrix.is_codeword(weight3_codeword(spec, DigitVec.parse("000", 3)).symbols))

    def test_a2_r4_distance_four(self):
        matrix = check_matrix_of(build_spec("a2", r=4))
        self.assertIsNone(min_distance_column_search(matrix, 3).first_dependency)
        self.assertEqual(min_distance_column_search(matrix, 4).first_dependency, 4)

    def test_golay_has_no_dependency_up_to_four(self):
        verdict = min_distance_column_search(check_matrix_of(build_spec("golay")), 4)
        self.assertTrue(verdict.distance_exceeds_budget)
        self.assertEqual(verdict.describe(), "d>4")

    def test_enumeration(self):
        self.assertEqual(min_weight_enumeration(build_spec("golay")), 5)
        self.assertEqual(min_weight_enumeration(build_spec("prototype", p=3, r=2)), 3)
        self.assertEqual(min_weight_enumeration(build_spec("a2sparse", r=4)), 4)
        self.assertEqual(min_weight_enumeration(build_spec("a2", r=3)), 4)

    def test_oracles_agree(self):
        for spec in (
            build_spec("prototype", p=3, r=2),
            build_spec("a2sparse", r=4),
            build_spec("a2", r=3),
            build_spec("a1", r=3),
        ):
            verdict = min_distance_column_search(check_matrix_of(spec), min(spec.distance, 4))
            self.assertEqual(verdict.first_dependency, min_weight_enumeration(spec), spec.label)

    def test_budgets(self):
        with self.assertRaises(BudgetError):
            min_weight_enumeration(build_spec("a2", r=4))
        with self.assertRaises(BudgetError):
            min_distance_column_search(check_matrix_of(build_spec("golay")), 5)


class ErrorSweepTests(unittest.TestCase):
    def test_a2_single_and_double_errors(self):
        spec = build_spec("a2", r=4)
        codec = codec_for(spec)
        single = error_sweep(codec, spec.zero_word(), 1)
        self.assertEqual((single.trials, single.corrected_ok), (44, 44))
        double = error_sweep(codec, spec.zero_word(), 2)
        self.assertEqual((double.trials, double.detected), (924, 924))
        self.assertEqual(pattern_count(22, 3, 2), 924)

    def test_prototype_double_errors_are_never_silent(self):
        spec = build_spec("prototype", p=3, r=2)
        report = sweep_codewords(spec, 2, codewords=10, seed=2024)
        self.assertEqual(report.stats.silent, 0)
        self.assertGreater(report.stats.miscorrected, 0)
        self.assertTrue(report.stats.is_partition())

    def test_golay_double_errors_are_all_corrected(self):
        report = sweep_codewords(build_spec("golay"), 2, codewords=10, seed=7)
        self.assertEqual(report.stats.trials, 242 * 11)
        self.assertEqual(report.stats.corrected_ok, 242 * 11)

    def test_golay_triple_errors_are_never_silent(self):
        report = sweep_codewords(build_spec("golay"), 3, codewords=2, seed=7)
        self.assertEqual(report.stats.silent, 0)

    def test_single_error_sweeps_for_every_family(self):
        for spec in _specs():
            report = sweep_codewords(spec, 1, codewords=3, seed=1)
            self.assertEqual(report.stats.corrected_ok, report.stats.trials, spec.label)

    def test_sampled_sweep(self):
        spec = build_spec("a2", r=4)
        report = sweep_codewords(spec, 2, codewords=2, seed=5, samples=50)
        self.assertEqual(report.stats.trials, 150)
        self.assertEqual(report.stats.detected, 150)
        self.assertFalse(report.exhaustive)
        self.assertIn("mode=sampled", report.to_record())


class SweepStatsTests(unittest.TestCase):
    def test_merge_and_formats(self):
        a = SweepStats(trials=3, clean=1, corrected_ok=2)
        b = SweepStats(trials=2, detected=1, silent=1)
        merged = a.merge(b)
        self.assertTrue(merged.is_partition())
        self.assertEqual(
            merged.to_record(), "trials=5 clean=1 corrected_ok=2 miscorrected=0 detected=1 silent=1"
        )
        self.assertEqual(merged.to_document()["detected"], 1)
        self.assertAlmostEqual(merged.rates()["corrected_ok"], 0.4)


if __name__ == "__main__":
    unittest.main()
