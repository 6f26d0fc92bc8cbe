#!/usr/bin/env python3

import unittest
from fractions import Fraction
from math import factorial

from rg_isogeny.algebra.series import TruncatedSeries, geometric, mul_capped
from rg_isogeny.errors import (DivisionByZeroSeries, InnerConstantTerm, NonIntegrableTerm, NonUnitConstantTerm,
                               NotReversible)

ORDER = 8


def log1p_series(order):
    return TruncatedSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, order)], 0, order)


class TestConstruction(unittest.TestCase):

    def test_leading_zeros_move_valuation(self):
        f = TruncatedSeries([0, 0, 3, 1], 0, 4)
        self.assertEqual(f.valuation, 2)
        self.assertEqual(f[1], 0)
        self.assertEqual(f[2], 3)

    def test_zero_series(self):
        f = TruncatedSeries.zero(5)
        self.assertTrue(f.is_zero())
        self.assertEqual(f.valuation, 5)

    def test_coefficient_beyond_order(self):
        with self.assertRaises(IndexError):
            geometric(4)[4]

    def test_to_string(self):
        self.assertEqual(TruncatedSeries([1, -1, 2], 0, 3).to_string(), '1 - z + 2*z^2 + O(z^3)')


class TestArithmetic(unittest.TestCase):

    def test_geometric_times_one_minus_z(self):
        one_minus_z = TruncatedSeries([1, -1], 0, ORDER)
        self.assertEqual(geometric(ORDER) * one_minus_z, TruncatedSeries.constant(1, ORDER))

    def test_product_order_is_the_known_one(self):
        f = TruncatedSeries([1], 2, 5)
        g = TruncatedSeries([1, 1, 1], 0, 3)
        product = mul_capped(f, g)
        self.assertEqual(product.order, 5)
        self.assertEqual(product, TruncatedSeries([1, 1, 1], 2, 5))

    def test_laurent_inverse(self):
        # 1/(z + z^2) = z^-1 - 1 + z - z^2 + z^3 + ...
        f = TruncatedSeries([1, 1], 1, 6)
        self.assertEqual(f.inverse(), TruncatedSeries([1, -1, 1, -1, 1], -1, 4))

    def test_laurent_plus_scalar(self):
        f = TruncatedSeries([1], -1, 3) + 1
        self.assertEqual(f, TruncatedSeries([1, 1], -1, 3))

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZeroSeries):
            geometric(3) / TruncatedSeries.zero(3)

    def test_scale(self):
        self.assertEqual(geometric(5).scale(2), geometric(5, 2))

    def test_first_difference(self):
        self.assertEqual(geometric(6).first_difference(geometric(6, 2)), 1)
        self.assertTrue(geometric(6).agrees_with(geometric(6, 2), 1))


class TestCalculus(unittest.TestCase):

    def test_derive(self):
        self.assertEqual(geometric(4).derive(), TruncatedSeries([1, 2, 3], 0, 3))

    def test_integrate_residue(self):
        with self.assertRaises(NonIntegrableTerm):
            TruncatedSeries([1], -1, 3).integrate()

    def test_integrate_geometric_is_log(self):
        # -log(1 - z)
        self.assertEqual(geometric(ORDER - 1).integrate(),
                         TruncatedSeries([0] + [Fraction(1, k) for k in range(1, ORDER)], 0, ORDER))


class TestSubstitution(unittest.TestCase):

    def test_substitute_power(self):
        self.assertEqual(geometric(4).substitute_power(2), TruncatedSeries([1, 0] * 4, 0, 8))

    def test_shift_and_truncate(self):
        f = geometric(5).shift(2)
        self.assertEqual((f.valuation, f.order), (2, 7))
        self.assertEqual(f.truncate(4), TruncatedSeries([1, 1], 2, 4))

    def test_reverse_of_log_is_exp(self):
        expected = TruncatedSeries([0] + [Fraction(1, factorial(k)) for k in range(1, ORDER)], 0, ORDER)
        self.assertEqual(log1p_series(ORDER).reverse(), expected)

    def test_compose_with_reverse(self):
        f = log1p_series(ORDER)
        self.assertEqual(f(f.reverse()), TruncatedSeries.variable(ORDER))

    def test_compose_needs_zero_constant_term(self):
        with self.assertRaises(InnerConstantTerm):
            geometric(4).compose(geometric(4))

    def test_reverse_needs_valuation_one(self):
        with self.assertRaises(NotReversible):
            geometric(4).reverse()

    def test_square_root(self):
        one_plus_z = TruncatedSeries([1, 1], 0, 10)
        root = one_plus_z.pow_frac(Fraction(1, 2))
        self.assertEqual(root[2], Fraction(-1, 8))
        self.assertEqual(root * root, one_plus_z)

    def test_fractional_power_needs_unit(self):
        with self.assertRaises(NonUnitConstantTerm):
            TruncatedSeries([2, 1], 0, 5).pow_frac(Fraction(1, 3))


if __name__ == '__main__':
    unittest.main()
