import unittest

import numpy as np

from digit_ecc.digit_arith import (
    DigitVec,
    char_digit,
    index_to_vec,
    inverse,
    is_prime,
    scalar_mul,
    solve_unique,
    vec_to_index,
    weighted_sum,
    xor_add,
    xor_sum,
)
from digit_ecc.errors import DataError, DomainError, UsageError


class DigitVecTests(unittest.TestCase):
    def test_xor_add_has_no_carries(self):
        a = DigitVec.parse("0121", 3)
        b = DigitVec.parse("0212", 3)
        self.assertEqual(str(xor_add(a, b)), "0000")
        self.assertEqual(str(a + DigitVec.parse("1111", 3)), "1202")

    def test_inverse_pairs_sum_to_zero(self):
        for p in (2, 3, 5, 7):
            for i in range(p ** 2):
                v = index_to_vec(i, p, 2)
                self.assertTrue((v + inverse(v)).is_zero())

    def test_ternary_inverse_is_doubling(self):
        for i in range(27):
            v = index_to_vec(i, 3, 3)
            self.assertEqual(inverse(v), scalar_mul(2, v))

    def test_index_round_trip_and_order(self):
        self.assertEqual(str(index_to_vec(7, 3, 3)), "021")
        self.assertEqual(vec_to_index(DigitVec.parse("021", 3)), 7)
        self.assertEqual(DigitVec.parse("100", 3).index, 9)

    def test_elementary_vectors(self):
        self.assertEqual(str(DigitVec.elementary(3, 5, 1)), "00001")
        self.assertEqual(str(DigitVec.elementary(3, 5, 5)), "10000")
        with self.assertRaises(UsageError):
            DigitVec.elementary(3, 5, 6)

    def test_digit_positions_count_from_least_significant(self):
        v = DigitVec.parse("202", 3)
        self.assertEqual([v.digit(0), v.digit(1), v.digit(2)], [2, 0, 2])
        self.assertEqual(v.leading_digit(), 2)
        self.assertEqual(DigitVec.zero(3, 3).leading_digit(), 0)

    def test_weighted_and_plain_sums(self):
        terms = [(1, DigitVec.parse("011", 3)), (2, DigitVec.parse("110", 3))]
        self.assertEqual(str(weighted_sum(terms, 3, 3)), "201")
        vectors = [DigitVec.parse("012", 3), DigitVec.parse("021", 3)]
        self.assertTrue(xor_sum(vectors, 3, 3).is_zero())

    def test_mismatched_operands_rejected(self):
        with self.assertRaises(UsageError):
            DigitVec.parse("01", 3) + DigitVec.parse("012", 3)
        with self.assertRaises(UsageError):
            DigitVec.parse("01", 3) + DigitVec.parse("01", 5)

    def test_bad_digits_and_bases(self):
        with self.assertRaises(DataError):
            DigitVec.parse("013", 3)
        with self.assertRaises(DataError):
            char_digit("?", 3)
        with self.assertRaises(UsageError):
            DigitVec(4, (0, 1))
        self.assertEqual(char_digit("a", 11), 10)


    def test_scalar_examples(self):
        self.assertEqual(str(scalar_mul(2, DigitVec.parse("22222", 3))), "11111")
        for p in (3, 5, 7):
            self.assertTrue(scalar_mul(p, index_to_vec(p ** 3 - 1, p, 3)).is_zero())

    def test_index_round_trip_is_exhaustive_below_81(self):
        for i in range(3 ** 4):
            self.assertEqual(vec_to_index(index_to_vec(i, 3, 4)), i)


class GroupLawTests(unittest.TestCase):
    PRIMES = (2, 3, 5, 7, 11, 13)

    def _random_vec(self, rng, p, r):
        return DigitVec(p, tuple(int(d) for d in rng.integers(0, p, size=r)))

    def test_group_laws_on_random_vectors(self):
        rng = np.random.default_rng(31)
        for p in self.PRIMES:
            for r in range(1, 7):
                zero = DigitVec.zero(p, r)
                for _ in range(25):
                    a, b, c = (self._random_vec(rng, p, r) for _ in range(3))
                    total = xor_add(a, b)
                    self.assertEqual((total.base, total.length), (p, r))
                    self.assertTrue(all(0 <= d < p for d in total.digits))
                    self.assertEqual(total, xor_add(b, a))
                    self.assertEqual(xor_add(total, c), xor_add(a, xor_add(b, c)))
                    self.assertEqual(xor_add(a, zero), a)
                    self.assertEqual(xor_add(a, inverse(a)), zero)

    def test_scalar_mul_is_repeated_addition(self):
        rng = np.random.default_rng(37)
        for p in self.PRIMES:
            for r in range(1, 7):
                a = self._random_vec(rng, p, r)
                repeated = DigitVec.zero(p, r)
                for k in range(2 * p + 1):
                    self.assertEqual(scalar_mul(k, a), repeated, f"p={p} r={r} k={k}")
                    repeated = xor_add(repeated, a)


class SolveUniqueTests(unittest.TestCase):
    def test_exactly_one_solution_for_small_primes(self):
        for p in (2, 3, 5, 7, 11):
            for z in range(1, p):
                for y in range(1, p):
                    solutions = [l for l in range(1, p) if (l * z) % p == y]
                    self.assertEqual(len(solutions), 1)
                    self.assertEqual(solve_unique(z, y, p), solutions[0])

    def test_zero_residue_is_out_of_domain(self):
        with self.assertRaises(DomainError):
            solve_unique(0, 1, 3)
        with self.assertRaises(DomainError):
            solve_unique(1, 0, 3)

    def test_composite_modulus_rejected(self):
        with self.assertRaises(UsageError):
            solve_unique(1, 1, 9)

    def test_primality(self):
        self.assertEqual([n for n in range(20) if is_prime(n)], [2, 3, 5, 7, 11, 13, 17, 19])


if __name__ == "__main__":
    unittest.main()
