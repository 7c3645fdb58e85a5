import os
import tempfile
import unittest
from itertools import combinations, product

import numpy as np

from digit_ecc.a2_codec import build_sparse_spec, sparse_decode, sparse_encode
from digit_ecc.code_model import OutcomeKind, parse
from digit_ecc.digit_arith import DigitVec
from digit_ecc.errors import DataError, UsageError
from digit_ecc.nwxli_codec import (
    GOLAY_SET,
    build_nwxli_spec,
    compute_syndrome,
    decode,
    encode,
    extract_message,
    golay_spec,
    load_index_set,
)
from digit_ecc.wxli_sets import build_family


def _digits(text):
    return [int(c) for c in text]


class GolaySpecTests(unittest.TestCase):
    def test_parameters(self):
        spec = golay_spec()
        self.assertEqual(spec.code.parameters, "[11,6,5]_3")
        self.assertEqual(spec.n_cert, 4)
        self.assertEqual(spec.t, 2)
        self.assertEqual([str(v) for v in spec.redundant], list(GOLAY_SET[:5]))
        self.assertEqual([str(v) for v in spec.message], list(GOLAY_SET[5:]))

    def test_worked_encode(self):
        spec = golay_spec()
        word = encode(spec, _digits("012210"))
        self.assertEqual(str(word), "10122012210")
        self.assertTrue(compute_syndrome(spec, word).is_zero())
        self.assertEqual(list(extract_message(spec, word)), _digits("012210"))

    def test_worked_decode(self):
        spec = golay_spec()
        received = parse(spec.code, "10122012222")
        self.assertEqual(str(compute_syndrome(spec, received)), "00221")
        outcome, repaired = decode(spec, received)
        self.assertEqual(outcome.kind, OutcomeKind.CORRECTED_MULTI)
        self.assertEqual([(c.label, c.delta) for c in outcome.corrections], [("22110", 1), ("22222", 2)])
        self.assertEqual(str(repaired), "10122012210")

    def test_clean_and_zero(self):
        spec = golay_spec()
        self.assertEqual(encode(spec, [0] * 6).weight(), 0)
        outcome, _ = decode(spec, parse(spec.code, "10122012210"))
        self.assertEqual(outcome.kind, OutcomeKind.CLEAN)


class BoundedDistanceTests(unittest.TestCase):
    def test_every_pattern_up_to_weight_two_has_one_explanation(self):
        spec = golay_spec()
        zero = spec.code.zero_word()
        count = 0
        for w in (1, 2):
            for slots in combinations(range(11), w):
                for offsets in product((1, 2), repeat=w):
                    pattern = tuple(zip(slots, offsets))
                    outcome, repaired = decode(spec, zero.add_error(pattern), debug=True)
                    self.assertEqual(tuple((c.slot, c.delta) for c in outcome.corrections), pattern)
                    self.assertEqual(repaired, zero)
                    count += 1
        self.assertEqual(count, 242)

    def test_random_codewords_correct_double_errors(self):
        spec = golay_spec()
        rng = np.random.default_rng(17)
        for _ in range(10):
            word = encode(spec, [int(v) for v in rng.integers(0, 3, size=6)])
            for slots in combinations(range(11), 2):
                for offsets in product((1, 2), repeat=2):
                    _, repaired = decode(spec, word.add_error(zip(slots, offsets)))
                    self.assertEqual(repaired, word)

    def test_triple_errors_are_never_silent(self):
        spec = golay_spec()
        rng = np.random.default_rng(23)
        for _ in range(3):
            word = encode(spec, [int(v) for v in rng.integers(0, 3, size=6)])
            for slots in combinations(range(11), 3):
                for offsets in product((1, 2), repeat=3):
                    outcome, _ = decode(spec, word.add_error(zip(slots, offsets)))
                    self.assertNotEqual(outcome.kind, OutcomeKind.CLEAN)


class GeneralSetTests(unittest.TestCase):
    def test_i1_family_reproduces_sparse_behaviour(self):
        family = build_family(4)
        spec = build_nwxli_spec(family.i1, n_cert=3, redundant=family.redundant)
        sparse = build_sparse_spec(4)
        self.assertEqual(spec.t, 1)
        rng = np.random.default_rng(29)
        labels = [pos.label for pos in sparse.active_positions]
        for _ in range(10):
            message = [int(v) for v in rng.integers(0, 3, size=6)]
            word = encode(spec, message)
            reference = sparse_encode(sparse, message)
            self.assertEqual([word.value_at(l) for l in labels], [reference.value_at(l) for l in labels])
            for label in labels:
                for offset in (1, 2):
                    _, repaired = decode(spec, word.add_error([(spec.code.slot_of(label), offset)]))
                    _, expected = sparse_decode(sparse, reference.add_error([(sparse.slot_of(label), offset)]))
                    self.assertEqual([repaired.value_at(l) for l in labels], [expected.value_at(l) for l in labels])

    def test_layout_puts_sorted_redundant_members_first(self):
        family = build_family(4)
        spec = build_nwxli_spec(family.i1, n_cert=3, redundant=family.redundant)
        head = [pos.label for pos in spec.code.active_positions[:4]]
        self.assertEqual(head, ["0011", "0110", "0111", "1110"])
        rest = [pos.label for pos in spec.code.active_positions[4:]]
        self.assertEqual(rest, [str(v) for v in family.i1 if v not in set(family.redundant)])

    def test_rejects_sets_without_elementary_vectors(self):
        vectors = [DigitVec.parse(text, 3) for text in ("011", "101", "110", "111")]
        with self.assertRaises(UsageError):
            build_nwxli_spec(vectors)

    def test_rejects_uncertifiable_order(self):
        vectors = [DigitVec.parse(text, 3) for text in ("001", "010", "100", "011")]
        with self.assertRaises(UsageError):
            build_nwxli_spec(vectors, n_cert=3)
        self.assertEqual(build_nwxli_spec(vectors).n_cert, 2)


class IndexSetFileTests(unittest.TestCase):
    def _write(self, text):
        handle = tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False)
        handle.write(text)
        handle.close()
        self.addCleanup(os.remove, handle.name)
        return handle.name

    def test_golay_file_round_trip(self):
        path = self._write("# golay\n" + "\n".join(GOLAY_SET) + "\n\n")
        vectors = load_index_set(path)
        self.assertEqual([str(v) for v in vectors], list(GOLAY_SET))
        self.assertEqual(build_nwxli_spec(vectors).n_cert, 4)

    def test_elementary_line_order_does_not_change_the_layout(self):
        elementary = list(GOLAY_SET[:5])
        path = self._write("\n".join(reversed(elementary)) + "\n" + "\n".join(GOLAY_SET[5:]) + "\n")
        spec = build_nwxli_spec(load_index_set(path))
        self.assertEqual([pos.label for pos in spec.code.active_positions], list(GOLAY_SET))
        self.assertEqual(str(encode(spec, _digits("012210"))), "10122012210")

    def test_first_lines_must_be_elementary(self):
        path = self._write("01122\n00001\n00010\n00100\n01000\n10000\n")
        with self.assertRaises(DataError):
            load_index_set(path)

    def test_bad_digit_reports_line(self):
        path = self._write("001\n010\n100\n0x1\n")
        with self.assertRaisesRegex(DataError, ":4:"):
            load_index_set(path)


if __name__ == "__main__":
    unittest.main()
