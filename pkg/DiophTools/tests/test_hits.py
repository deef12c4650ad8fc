import math
import unittest
from fractions import Fraction as F

try:
    from DiophTools.ChosenNum.hits.approximants import (RealApproximant, exact_approximant, approximant_from_text,
                                                       named_approximant, convergents)
    from DiophTools.ChosenNum.hits.hits import (hit_primes, fractional_hits, loglog_heuristic, hit_probability,
                                               expected_hit_count)
    from DiophTools.ChosenNum.primes.harmonic import harmonic_H
    from DiophTools.ChosenNum.primes.sieve import primes_in_range, count_primes
    from DiophTools.ChosenNum.sequences.builders import (constant_sequence, custom_sequence, nearest_sequence,
                                                        random_sequence)
    from DiophTools.ChosenNum.errors import ImprecisionError, InvalidParameterError, MissingPrimeError
except ImportError as e:
    raise ImportError(f"Erro na importação: {e}") from e


class TestApproximants(unittest.TestCase):

    def test_convergents(self):
        terms = iter([1, 2, 2, 2, 2])
        self.assertEqual(list(convergents(terms)), [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)])

    def test_named(self):
        """Convergentes certificados: |x - p/q| <= eta"""
        targets = {"sqrt2": math.sqrt(2), "golden": (1 + math.sqrt(5)) / 2, "e": math.e}
        for name, target in targets.items():
            x = named_approximant(name, "1e-12")
            self.assertLessEqual(x.error_bound, F(1, 10**12))
            self.assertLess(abs(float(x.value) - target), 1e-11)
            self.assertEqual(x.label, name)

    def test_named_errors(self):
        with self.assertRaises(InvalidParameterError):
            named_approximant("pi", "1e-6")
        with self.assertRaises(InvalidParameterError):
            named_approximant("sqrt2", 0)

    def test_exact(self):
        x = exact_approximant("1/3")
        self.assertTrue(x.exact)
        self.assertEqual(x.to_json(), {"value": "1/3", "error_bound": "0/1", "label": "rational 1/3"})
        self.assertEqual(approximant_from_text("1/3"), x)
        self.assertEqual(approximant_from_text("1/3", "1/100").error_bound, F(1, 100))
        with self.assertRaises(InvalidParameterError):
            RealApproximant(F(1, 3), F(-1, 10), "bad")


class TestHitPrimes(unittest.TestCase):

    def test_rational_third(self):
        """x = 1/3 com o resíduo mais próximo: todo primo é acerto"""
        seq = nearest_sequence(F(1, 3), 100, F(1, 2))
        report = hit_primes(exact_approximant(F(1, 3)), seq, 100)
        self.assertEqual(report.hits, primes_in_range(1, 100))
        self.assertEqual(report.ambiguous, [])

    def test_zero_constant(self):
        seq = constant_sequence(100, F(1, 4))
        report = hit_primes(exact_approximant(0), seq, 100)
        self.assertEqual(report.hits, primes_in_range(1, 100))
        self.assertAlmostEqual(report.heuristic, 2 * 0.25 * float(harmonic_H(1, 100)))
        self.assertAlmostEqual(report.ratio, 25 / report.heuristic)

    def test_zero_half_residue(self):
        primes = primes_in_range(1, 100)
        seq = custom_sequence([(p, p // 2) for p in primes], F(1, 4))
        report = hit_primes(exact_approximant(0), seq, 100)
        self.assertEqual(report.hits, [])
        self.assertEqual(report.ambiguous, [])

    def test_ambiguous_and_refinement(self):
        """Diminuir eta só resolve ambíguos, nunca troca acerto por erro"""
        seq = random_sequence(200, F(1, 2), seed=4)
        fine = hit_primes(exact_approximant(F(2, 7)), seq, 200)
        for eta in ("1/50", "1/500", "1/5000"):
            coarse = hit_primes(approximant_from_text("2/7", eta), seq, 200)
            self.assertTrue(set(coarse.hits) <= set(fine.hits))
            self.assertFalse(set(coarse.hits) & set(coarse.ambiguous))
            settled_misses = set(primes_in_range(1, 200)) - set(coarse.hits) - set(coarse.ambiguous)
            self.assertFalse(settled_misses & set(fine.hits))

    def test_borderline_prime(self):
        # p = 5: distance 1/10 equals c/p, so +-1/100 straddles the threshold
        seq = constant_sequence(10, F(1, 2))
        report = hit_primes(approximant_from_text("1/10", "1/100"), seq, 10)
        self.assertEqual(report.hits, [2, 3])
        self.assertEqual(report.ambiguous, [5])

    def test_missing(self):
        seq = constant_sequence(50, F(1, 2))
        with self.assertRaises(MissingPrimeError):
            hit_primes(exact_approximant(0), seq, 100)

    def test_csv_rows(self):
        seq = constant_sequence(10, F(1, 2))
        rows = hit_primes(exact_approximant(F(1, 10)), seq, 10).csv_rows()
        self.assertEqual(rows[0], [2, 1, 10, 1, 0])
        self.assertEqual(len(rows), 4)


class TestFractionalHits(unittest.TestCase):

    def test_zero(self):
        report = fractional_hits(exact_approximant(0), F(1, 4), 100)
        self.assertEqual(report.hits, primes_in_range(1, 100))

    def test_half(self):
        report = fractional_hits(exact_approximant(F(1, 2)), F(1, 4), 100)
        self.assertEqual(report.hits, [2])
        self.assertAlmostEqual(report.heuristic, 25 / 4)
        self.assertAlmostEqual(report.reciprocal_sum, 0.5)

    def test_rational_cycle(self):
        """{2p/7} depende só de p mod 7: acerto se 2p = 0 ou 1 (mod 7)"""
        report = fractional_hits(exact_approximant(F(2, 7)), F(1, 4), 500)
        expected = [p for p in primes_in_range(1, 500) if (2 * p) % 7 in (0, 1)]
        self.assertEqual(report.hits, expected)
        self.assertIn(7, report.hits)

    def test_imprecise(self):
        with self.assertRaises(ImprecisionError):
            fractional_hits(approximant_from_text("1/3", "1/100"), F(1, 4), 100)

    def test_sqrt2_equidistribution(self):
        x = named_approximant("sqrt2", "1e-14")
        report = fractional_hits(x, F(1, 4), 10**5)
        self.assertEqual(report.ambiguous, [])
        self.assertLessEqual(abs(len(report.hits) / count_primes(10**5) - 0.25), 0.02)


class TestHeuristics(unittest.TestCase):

    def test_small_bound(self):
        h = loglog_heuristic(F(1, 2), 10)
        self.assertAlmostEqual(h.value, 1 / 2 + 1 / 3 + 1 / 5 + 1 / 7)
        self.assertAlmostEqual(float(loglog_heuristic(F(1, 4), 10)) * 2, h.value)

    def test_mertens_growth(self):
        c = F(1, 2)
        difference = loglog_heuristic(c, 10**6).value - loglog_heuristic(c, 10**3).value
        predicted = 2 * 0.5 * (math.log(math.log(10**6)) - math.log(math.log(10**3)))
        self.assertLessEqual(abs(difference / predicted - 1), 0.05)
        h = loglog_heuristic(c, 10**6)
        self.assertAlmostEqual(h.value, h.proxy, delta=1e-3)

    def test_hit_probability(self):
        self.assertEqual(hit_probability(F(1, 3), 3, F(1, 2)), F(1, 3))
        self.assertEqual(hit_probability(F(1, 6), 3, F(1, 2)), F(2, 3))
        self.assertEqual(hit_probability(F(1, 6), 3, F(1, 4)), 0)
        self.assertEqual(hit_probability(F(1, 6), 5, F(1, 4)), F(1, 5))

    def test_expected_hit_count(self):
        seq = random_sequence(100, F(1, 4), seed=7)
        self.assertEqual(expected_hit_count(seq, 100), 2 * F(1, 4) * harmonic_H(1, 100))


if __name__ == "__main__":
    unittest.main()
