#!/usr/bin/env python3

import unittest

import mpmath

from rg_isogeny.algebra.exactnum import GaussianRational, Z
from rg_isogeny.algebra.ratfun import RatFun
from rg_isogeny.algebra.series import TruncatedSeries, geometric
from rg_isogeny.checks.padehunt import (POLE, ZERO, delta_not_rational, lattice_curve_member, lattice_predict,
                                        lattice_search, match_lattice, pade, pole_zero_lattice, rational_hunt,
                                        rational_reconstruct, singularity_scan, zs_constant)
from rg_isogeny.checks.rotabaxter import preset, r_minus4
from rg_isogeny.constants import ZS_PRINTED
from rg_isogeny.errors import InsufficientOrder


class TestPade(unittest.TestCase):

    def test_geometric(self):
        self.assertEqual(pade(geometric(4), 0, 1).value, RatFun(1, 1 - Z))

    def test_singular_system_lowers_degrees(self):
        approximant = pade(TruncatedSeries.constant(3, 4), 1, 1)
        self.assertGreaterEqual(approximant.defect, 1)
        self.assertEqual(approximant.value, RatFun(3))

    def test_needs_enough_coefficients(self):
        with self.assertRaises(InsufficientOrder):
            pade(geometric(3), 2, 2)

    def test_reconstruct(self):
        self.assertEqual(rational_reconstruct(r_minus4().series(10), 4), r_minus4())
        self.assertIsNone(rational_reconstruct(geometric(10) * geometric(10).scale(3) + TruncatedSeries(
            [0, 0, 0, 0, 0, 0, 0, 0, 0, 1], 0, 10), 3))


class TestHunt(unittest.TestCase):

    def test_finds_r_minus4(self):
        self.assertEqual(rational_hunt(preset('main'), -4, 4, 16), r_minus4())

    def test_order_too_low(self):
        with self.assertRaises(InsufficientOrder):
            rational_hunt(preset('main'), -4, 4, 12)

    def test_delta_is_not_rational(self):
        self.assertTrue(delta_not_rational(4))


class TestLattice(unittest.TestCase):

    def test_predict(self):
        pt = lattice_predict(2, 1)
        self.assertEqual((pt.x, pt.y, pt.kind), (-7, -24, POLE))
        self.assertEqual(lattice_predict(2, 0).kind, ZERO)
        self.assertEqual(lattice_predict(1, 0).location, 1)

    def test_origin_is_excluded(self):
        with self.assertRaises(ValueError):
            lattice_predict(0, 0)

    def test_curve_membership(self):
        pt = lattice_predict(2, 1)
        self.assertTrue(lattice_curve_member(pt, 2))
        self.assertTrue(lattice_curve_member(pt, 1))

    def test_search(self):
        pt = lattice_search(81, 0, 4)
        self.assertEqual((pt.x, pt.y, pt.kind), (81, 0, POLE))
        self.assertIsNone(lattice_search(2, 3, 4))

    def test_match(self):
        pt = match_lattice(mpmath.mpc(-7.001, -24))
        self.assertEqual((pt.x, pt.y), (-7, -24))
        self.assertIsNone(match_lattice(mpmath.mpc(-5, -24)))

    def test_period_lattice(self):
        pole, pole_pt, zero, zero_pt = pole_zero_lattice(0, 0)
        self.assertEqual(pole, 1)
        self.assertEqual(pole_pt.location, GaussianRational(1, 0))
        self.assertIsNone(zero_pt)
        pole, pole_pt, zero, zero_pt = pole_zero_lattice(1, 0)
        self.assertEqual(pole, pole_pt.location)
        self.assertEqual(zero, zero_pt.location)


class TestNumerics(unittest.TestCase):

    def test_zs(self):
        with mpmath.workdps(40):
            self.assertLess(abs(zs_constant(30) - mpmath.mpf(ZS_PRINTED)), mpmath.mpf(10) ** -25)

    def test_zs_printed_digits(self):
        with mpmath.workdps(50):
            self.assertLess(abs(zs_constant(43) - mpmath.mpf(ZS_PRINTED)), mpmath.mpf(10) ** -38)

    def test_scan_needs_long_series(self):
        with self.assertRaises(InsufficientOrder):
            singularity_scan(geometric(20), 20)


if __name__ == '__main__':
    unittest.main()
