#!/usr/bin/env python3

import unittest
from fractions import Fraction

from rg_isogeny.algebra.exactnum import MultiPoly, UniPoly, Z
from rg_isogeny.algebra.ratfun import BiRatFun, RatFun, RatMap2, map2_compose, map2_equal, rf_compose
from rg_isogeny.algebra.series import TruncatedSeries, geometric
from rg_isogeny.errors import DegreeCapExceeded, ZeroDenominator


class TestRatFun(unittest.TestCase):

    def setUp(self):
        self.f = RatFun(Z, 1 - Z)

    def test_reduced_on_construction(self):
        self.assertEqual(RatFun(Z ** 2 - 1, Z - 1), RatFun(Z + 1))
        self.assertTrue(RatFun(Z ** 2 - 1, Z - 1).is_polynomial())

    def test_lowest_denominator_coefficient_is_one(self):
        g = RatFun(2 * Z, 4 + 2 * Z)
        self.assertEqual(g.den, UniPoly([1, Fraction(1, 2)]))
        self.assertEqual(g.num, UniPoly([0, Fraction(1, 2)]))

    def test_zero_denominator(self):
        with self.assertRaises(ZeroDenominator):
            RatFun(Z, 0)

    def test_compose(self):
        self.assertEqual(self.f(self.f), RatFun(Z, 1 - 2 * Z))

    def test_degree_cap(self):
        with self.assertRaises(DegreeCapExceeded):
            rf_compose(self.f, self.f, cap=0)

    def test_arithmetic(self):
        self.assertEqual(self.f + 1, RatFun(1, 1 - Z))
        self.assertEqual(self.f * (1 - Z), RatFun(Z))
        self.assertEqual(self.f / self.f, 1)

    def test_derivative(self):
        self.assertEqual(self.f.derivative(), RatFun(1, (1 - Z) ** 2))

    def test_inverse_arg(self):
        self.assertEqual(self.f.inverse_arg(), RatFun(-1, 1 - Z))

    def test_evaluation(self):
        self.assertEqual(self.f(Fraction(1, 2)), 1)
        with self.assertRaises(ZeroDenominator):
            self.f(1)

    def test_series(self):
        self.assertEqual(RatFun(1, 1 - Z).series(6), geometric(6))
        self.assertEqual(self.f.multiplier(), 1)
        self.assertEqual(RatFun(-4 * Z, (1 - Z) ** 2).multiplier(), -4)

    def test_laurent_series(self):
        self.assertEqual(RatFun(1, Z + Z ** 2).series(4), TruncatedSeries([1, -1, 1, -1, 1], -1, 4))


class TestBiRatFun(unittest.TestCase):

    def setUp(self):
        self.x, self.z = MultiPoly.variables(2)

    def test_common_monomial_cancelled(self):
        self.assertTrue(BiRatFun(self.x * self.z, self.x).equals(BiRatFun.variable(1)))

    def test_evaluate(self):
        f = BiRatFun(self.x + self.z, 1 + self.x * self.z)
        self.assertEqual(f(Fraction(1, 2), Fraction(1, 3)), Fraction(5, 7))

    def test_map_composition(self):
        square = RatMap2(BiRatFun(self.x ** 2), BiRatFun(self.z ** 2), label=2)
        fourth = map2_compose(square, square)
        self.assertEqual(fourth.label, 4)
        self.assertTrue(map2_equal(fourth, RatMap2(BiRatFun(self.x ** 4), BiRatFun(self.z ** 4))))

    def test_map_degree_cap(self):
        square = RatMap2(BiRatFun(self.x ** 2), BiRatFun(self.z ** 2), label=2)
        with self.assertRaises(DegreeCapExceeded):
            map2_compose(square, square, cap=3)


if __name__ == '__main__':
    unittest.main()
