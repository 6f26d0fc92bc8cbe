#!/usr/bin/env python3

import unittest
from fractions import Fraction

import mpmath

from rg_isogeny.algebra.exactnum import Z
from rg_isogeny.algebra.hypergeom import (F21Params, PullbackIdentity, check_pullback_identity, contiguity_check,
                                          euler_integral_value, euler_second_solution_check, f21_series, f21_value,
                                          gauss_at_1, gauss_quotient, load_identities, zs_value)
from rg_isogeny.algebra.ratfun import RatFun
from rg_isogeny.constants import ZS_PRINTED
from rg_isogeny.errors import BadC, DivergentPoint

QUARTER = F21Params(Fraction(1, 4), Fraction(1, 2), Fraction(5, 4))


class TestSeries(unittest.TestCase):

    def test_coefficients(self):
        f = f21_series(F21Params(Fraction(1, 2), Fraction(1, 2), 1), 3)
        self.assertEqual(f.coefficients(), [1, Fraction(1, 4), Fraction(9, 64)])

    def test_nonpositive_c(self):
        for c in (0, -2):
            with self.assertRaises(BadC):
                F21Params(1, 1, c)

    def test_symmetric_in_a_and_b(self):
        p = F21Params(Fraction(2, 3), Fraction(1, 7), Fraction(9, 5))
        self.assertEqual(f21_series(p, 12), f21_series(p.swapped(), 12))

    def test_contiguity(self):
        self.assertTrue(contiguity_check(F21Params(Fraction(1, 3), Fraction(3, 4), Fraction(5, 2)), 15))

    def test_second_solution(self):
        self.assertTrue(euler_second_solution_check(QUARTER, 12))


class TestPullbackIdentities(unittest.TestCase):

    def test_corpus_loads(self):
        names = [identity.name for identity in load_identities()]
        self.assertIn('vid', names)
        self.assertEqual(len(names), len(set(names)))

    def test_vid_holds(self):
        identity = next(i for i in load_identities() if i.name == 'vid')
        self.assertTrue(check_pullback_identity(identity, 20))

    def test_wrong_exponent_fails(self):
        identity = next(i for i in load_identities() if i.name == 'vid')
        broken = PullbackIdentity(name='broken', left=identity.left, left_arg=identity.left_arg,
                                  right=identity.right, right_arg=identity.right_arg,
                                  prefactor=[(RatFun(1 - Z), Fraction(1, 2))])
        self.assertFalse(check_pullback_identity(broken, 20))

    def test_prefactor_base_must_be_one_at_zero(self):
        with self.assertRaises(ValueError):
            PullbackIdentity(name='bad', left=QUARTER, left_arg=RatFun(Z), right=QUARTER, right_arg=RatFun(Z),
                             prefactor=[(RatFun(2 - Z), Fraction(1, 2))])


class TestNumerics(unittest.TestCase):

    def test_value_inside_disc(self):
        with mpmath.workdps(30):
            self.assertLess(abs(f21_value(F21Params(1, 1, 1), 0.5, 20) - 2), mpmath.mpf(10) ** -20)

    def test_value_outside_disc(self):
        with self.assertRaises(DivergentPoint):
            f21_value(QUARTER, 1, 20)

    def test_gauss_quotient_diverges(self):
        with self.assertRaises(DivergentPoint):
            gauss_quotient(F21Params(1, 1, 1), 20)

    def test_zs_constant(self):
        with mpmath.workdps(40):
            self.assertLess(abs(zs_value(30) - mpmath.mpf(ZS_PRINTED)), mpmath.mpf(10) ** -25)

    def test_euler_integral_at_1(self):
        with mpmath.workdps(50):
            quotient = gauss_quotient(QUARTER, 40)
            integral = euler_integral_value(QUARTER, 1, 40)
            self.assertLess(abs(quotient - integral), mpmath.mpf(10) ** -38)

    def test_euler_integral_inside_disc(self):
        with mpmath.workdps(50):
            series = f21_value(QUARTER, mpmath.mpf(1) / 2, 40)
            integral = euler_integral_value(QUARTER, mpmath.mpf(1) / 2, 40)
            self.assertLess(abs(series - integral), mpmath.mpf(10) ** -38)

    def test_gauss_at_1_high_precision(self):
        with mpmath.workdps(50):
            self.assertLess(abs(gauss_at_1(QUARTER, 45) - gauss_quotient(QUARTER, 45)), mpmath.mpf(10) ** -40)


if __name__ == '__main__':
    unittest.main()
