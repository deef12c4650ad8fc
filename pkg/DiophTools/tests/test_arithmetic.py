import itertools
import unittest
from fractions import Fraction as F

import numpy as np

try:
    from DiophTools.ChosenNum.arithmetic.rational import (to_rational, format_rational, parse_rational,
                                                         circle_distance, check_c, frac_part)
    from DiophTools.ChosenNum.arithmetic.arcs import (Arc, arc_of, normalize_union, measure, complement,
                                                     intersect_measure, union_to_json, union_from_json)
    from DiophTools.ChosenNum.arithmetic.coverage import CoverageState
    from DiophTools.ChosenNum.errors import InvalidParameterError
except ImportError as e:
    raise ImportError(f"Erro na importação: {e}") from e


class TestRational(unittest.TestCase):

    def test_format(self):
        """Racionais sempre como "num/den", inteiros incluídos"""
        self.assertEqual(format_rational(F(1)), "1/1")
        self.assertEqual(format_rational(F(6, 8)), "3/4")
        self.assertEqual(format_rational(0), "0/1")
        self.assertEqual(parse_rational("3/4"), F(3, 4))
        self.assertEqual(to_rational("1e-14"), F(1, 10**14))

    def test_floats_refused(self):
        with self.assertRaises(InvalidParameterError):
            to_rational(0.5)
        with self.assertRaises(InvalidParameterError):
            to_rational(True)
        with self.assertRaises(InvalidParameterError):
            to_rational("a/b")

    def test_check_c(self):
        self.assertEqual(check_c("1/2"), F(1, 2))
        for bad in ("3/4", "0", "-1/4"):
            with self.assertRaises(InvalidParameterError) as ctx:
                check_c(bad)
            self.assertEqual(str(ctx.exception), "c must be in (0,1/2]")

    def test_circle_distance(self):
        self.assertEqual(circle_distance(0, F(9, 10)), F(1, 10))
        self.assertEqual(circle_distance(F(1, 3), F(1, 3)), 0)
        self.assertEqual(circle_distance(F(1, 4), F(3, 4)), F(1, 2))
        self.assertEqual(frac_part(F(-1, 10)), F(9, 10))


class TestArcs(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        c = F(1, 2)
        cls.arc2 = arc_of(2, 0, c)   # [3/4, 1] u [0, 1/4]
        cls.arc3 = arc_of(3, 1, c)   # [1/6, 1/2]

    def test_arc_of_wraps(self):
        """O arco em torno de 0 passa por 1 e mede exatamente 2c/p"""
        arc = arc_of(5, 0, F(1, 2))
        self.assertEqual(arc.left, F(9, 10))
        self.assertEqual(arc.length, F(1, 5))
        self.assertEqual(arc.pieces(), [(F(9, 10), F(1)), (F(0), F(1, 10))])
        self.assertEqual(self.arc3.pieces(), [(F(1, 6), F(1, 2))])

    def test_arc_validation(self):
        with self.assertRaises(InvalidParameterError):
            arc_of(5, 5, F(1, 2))
        with self.assertRaises(InvalidParameterError):
            arc_of(5, 1, F(3, 4))
        with self.assertRaises(InvalidParameterError):
            Arc(F(1), F(1, 2))

    def test_contains_is_closed(self):
        self.assertTrue(self.arc3.contains(F(1, 6)))
        self.assertTrue(self.arc3.contains(F(1, 2)))
        self.assertFalse(self.arc3.contains(F(1, 7)))
        self.assertTrue(self.arc2.contains(F(9, 10)))
        self.assertTrue(self.arc2.contains(0))
        self.assertFalse(self.arc2.contains(F(1, 2)))

    def test_union_and_measure(self):
        u = normalize_union([self.arc2, self.arc3])
        self.assertEqual(measure(u), F(3, 4))
        self.assertEqual(len(u), 1)
        self.assertEqual(u.arcs[0], Arc(F(3, 4), F(3, 4)))
        self.assertEqual(normalize_union([self.arc3, self.arc2]), u)
        self.assertEqual(normalize_union(list(u)), u)
        self.assertEqual(measure(normalize_union([])), 0)

    def test_complement(self):
        u = normalize_union([self.arc2, self.arc3])
        comp = complement(u)
        self.assertEqual(measure(u) + measure(comp), 1)
        self.assertTrue(comp.contains(F(5, 8)))
        self.assertFalse(comp.contains(F(1, 3)))

    def test_intersect_measure(self):
        self.assertEqual(intersect_measure(self.arc2, self.arc3), F(1, 12))
        self.assertEqual(intersect_measure(self.arc3, self.arc2), F(1, 12))
        # touching arcs share one point only
        self.assertEqual(intersect_measure(arc_of(3, 0, F(1, 2)), self.arc3), 0)

    def test_full_circle(self):
        u = normalize_union([arc_of(3, a, F(1, 2)) for a in range(3)])
        self.assertEqual(measure(u), 1)
        self.assertEqual(measure(complement(u)), 0)

    def test_json(self):
        u = normalize_union([self.arc2, self.arc3])
        data = union_to_json(u)
        self.assertEqual(data, [["3/4", "3/4"]])
        self.assertEqual(union_from_json(data), u)


class TestCoverageState(unittest.TestCase):

    def test_fresh_state(self):
        state = CoverageState()
        self.assertEqual(state.uncovered, 1)
        gains = state.gains(3, F(1, 2))
        self.assertEqual(gains, {0: F(1, 3), 1: F(1, 3), 2: F(1, 3)})
        self.assertEqual(state.best(3, F(1, 2)), (0, F(1, 3)))

    def test_gains_after_cut(self):
        """Empate entre a=1 e a=2: vence o menor numerador"""
        c = F(1, 2)
        state = CoverageState()
        self.assertEqual(state.add(arc_of(2, 0, c)), F(1, 2))
        self.assertEqual(state.gaps, ((F(1, 4), F(3, 4)),))
        gains = state.gains(3, c)
        self.assertEqual(gains.get(0, 0), 0)
        self.assertEqual(gains[1], F(1, 4))
        self.assertEqual(gains[2], F(1, 4))
        self.assertEqual(state.best(3, c), (1, F(1, 4)))
        self.assertEqual(state.add(arc_of(3, 1, c)), F(1, 4))
        self.assertEqual(state.uncovered, F(1, 4))
        self.assertEqual(state.uncovered_union().measure, F(1, 4))

    def test_gains_match_unions(self):
        c = F(1, 8)
        arcs = [arc_of(2, 1, c), arc_of(3, 2, c), arc_of(5, 4, c), arc_of(7, 0, c)]
        state = CoverageState()
        for arc in arcs:
            state.add(arc)
        base = normalize_union(arcs).measure
        self.assertEqual(state.covered, base)
        gains = state.gains(11, c)
        for a in range(11):
            with_a = normalize_union(arcs + [arc_of(11, a, c)]).measure
            self.assertEqual(gains.get(a, 0), with_a - base)

    def test_fully_covered(self):
        c = F(1, 2)
        state = CoverageState()
        for a in range(3):
            state.add(arc_of(3, a, c))
        self.assertEqual(state.uncovered, 0)
        self.assertEqual(state.best(5, c), (0, 0))


class TestUnionProperties(unittest.TestCase):
    """Famílias pequenas de arcos aleatórios com extremos em (1/60)Z"""

    GRID = 60

    @classmethod
    def setUpClass(cls):
        rng = np.random.default_rng(31415)
        cls.rng = rng
        cls.families = []
        for _ in range(200):
            size = int(rng.integers(1, 7))
            cls.families.append([Arc(F(int(rng.integers(0, cls.GRID)), cls.GRID),
                                     F(int(rng.integers(1, cls.GRID // 2 + 1)), cls.GRID))
                                 for _ in range(size)])

    def grid_measure(self, u, refine=10):
        # every endpoint is on the 1/60 grid, so cell midpoints of a finer grid count exactly
        n = self.GRID * refine
        hits = sum(1 for k in range(n) if u.contains(F(2 * k + 1, 2 * n)))
        return F(hits, n)

    def test_order_independent(self):
        for arcs in self.families:
            u = normalize_union(arcs)
            shuffled = [arcs[i] for i in self.rng.permutation(len(arcs))]
            self.assertEqual(normalize_union(shuffled), u)
            self.assertEqual(normalize_union(list(u)), u)

    def test_membership(self):
        points = [F(int(k), 997) for k in self.rng.integers(0, 997, 40)] + [F(k, self.GRID) for k in range(self.GRID)]
        for arcs in self.families:
            u = normalize_union(arcs)
            for x in points:
                self.assertEqual(u.contains(x), any(arc.contains(x) for arc in arcs))

    def test_complement_measure(self):
        for arcs in self.families:
            u = normalize_union(arcs)
            self.assertEqual(measure(u) + measure(complement(u)), 1)

    def test_measure_against_sampling(self):
        """Medida <= soma dos comprimentos, com igualdade sse disjuntos"""
        for arcs in self.families:
            u = normalize_union(arcs)
            total = sum((arc.length for arc in arcs), F(0))
            self.assertEqual(measure(u), self.grid_measure(u))
            self.assertLessEqual(measure(u), total)
            disjoint = all(intersect_measure(a, b) == 0 for a, b in itertools.combinations(arcs, 2))
            self.assertEqual(measure(u) == total, disjoint)


if __name__ == "__main__":
    unittest.main()
