#!/usr/bin/env python3

import unittest

from rg_isogeny.algebra.exactnum import MultiPoly
from rg_isogeny.checks.modular import (ATKIN_LEHNER, HauptmodulParam, ModularCurve, alpha_operator, annihilates,
                                       atkin_lehner, beta_operator, conjugator, cov_identity, cross_polynomial,
                                       curve_checks, f_of_j_check, hauptmodul_side, landen_check,
                                       printed_atkin_lehner_quadratic)
from rg_isogeny.errors import InsufficientOrder


class TestCurve(unittest.TestCase):

    def setUp(self):
        self.curve = ModularCurve.printed()
        self.param = HauptmodulParam.printed()

    def test_symmetric(self):
        self.assertTrue(self.curve.is_symmetric())

    def test_hauptmoduls_lie_on_the_curve(self):
        self.assertTrue(self.curve.vanishes_on(self.param.u, self.param.v))
        self.assertFalse(self.curve.vanishes_on(self.param.u, self.param.u))

    def test_j_form_factor(self):
        # the constant 8 30^9 of the j-form lands on 5^9 u^3 v^3
        self.assertEqual(self.curve.hauptmodul_factor(), 27 * 1728 ** 2)

    def test_all_curve_checks(self):
        self.assertEqual([label for label, ok in curve_checks() if not ok], [])

    def test_landen(self):
        self.assertTrue(landen_check())


class TestAtkinLehner(unittest.TestCase):

    def test_involution_and_cofactor(self):
        involution, cofactor = atkin_lehner()
        self.assertTrue(involution)
        self.assertEqual(cofactor, printed_atkin_lehner_quadratic())

    def test_cross_polynomial(self):
        z, w = MultiPoly.variables(2)
        self.assertEqual(cross_polynomial(), w * (z + 256) ** 3 - z ** 2 * (w + 16) ** 3)
        self.assertEqual(cross_polynomial().divide_exact(z * w - ATKIN_LEHNER), printed_atkin_lehner_quadratic())


class TestOperators(unittest.TestCase):

    def test_alpha_annihilates(self):
        param = HauptmodulParam.printed()
        self.assertIsNone(annihilates(alpha_operator(), hauptmodul_side(param.u, 20)))
        self.assertIsNone(annihilates(beta_operator(), hauptmodul_side(param.v, 20)))

    def test_conjugation(self):
        self.assertEqual(alpha_operator().conjugate_by_power(conjugator()), beta_operator())

    def test_covariance(self):
        self.assertTrue(cov_identity(16))
        self.assertTrue(f_of_j_check(16))

    def test_covariance_minimum_order(self):
        with self.assertRaises(InsufficientOrder):
            cov_identity(4)


if __name__ == '__main__':
    unittest.main()
