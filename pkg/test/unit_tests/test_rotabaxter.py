#!/usr/bin/env python3

import unittest
from fractions import Fraction

from rg_isogeny.algebra.exactnum import GaussianRational, UniPoly, Z
from rg_isogeny.algebra.ratfun import RatFun
from rg_isogeny.checks import rotabaxter
from rg_isogeny.checks.rotabaxter import (a_main, delta_residual, delta_solve, flow_commutes, flow_solve,
                                          flow_solve_parametric, infinitesimal_generator, iterate, mad_check,
                                          main_family_map, preset, r_minus4, residual, t_map)
from rg_isogeny.config import RunConfig
from rg_isogeny.constants import DELTA_PRINTED, F_PRINTED, PARAMETRIC_ORDER_CAP
from rg_isogeny.errors import ConstantMap, UnknownPreset
from rg_isogeny.report import PASS


class TestPresets(unittest.TestCase):

    def test_main_residue(self):
        self.assertEqual(preset('main').residue, Fraction(3, 4))

    def test_gauss_preset(self):
        system = preset('gauss(1/2, 1/3, c=1+a)')
        self.assertEqual(system.residue, Fraction(1, 2))

    def test_unknown_preset(self):
        with self.assertRaises(UnknownPreset):
            preset('nope')


class TestCovarianceEquation(unittest.TestCase):

    def setUp(self):
        self.a = a_main()

    def test_r_minus4_and_iterates(self):
        self.assertTrue(mad_check(self.a, r_minus4()))
        self.assertTrue(mad_check(self.a, iterate(r_minus4(), 2)))
        self.assertTrue(mad_check(self.a, t_map()))

    def test_scaling_is_not_covariant(self):
        self.assertFalse(mad_check(self.a, RatFun(2 * Z)))

    def test_constant_map(self):
        with self.assertRaises(ConstantMap):
            residual(self.a, RatFun(3))

    def test_family_map_of_product(self):
        dpoly = UniPoly([1, -2, 5]) * UniPoly([1, 52, -26, -12, 1])
        rmap = main_family_map(dpoly)
        self.assertEqual(rmap.degree, 25)
        self.assertEqual(rmap.multiplier(), 625)
        self.assertEqual(rmap, main_family_map(list(dpoly.coeffs)))


class TestFlows(unittest.TestCase):

    def setUp(self):
        self.system = preset('main')

    def test_flow_at_minus4_is_rational(self):
        self.assertEqual(flow_solve(self.system, -4, 12).series, r_minus4().series(12))

    def test_zero_multiplier_is_absorbing(self):
        self.assertTrue(flow_solve(self.system, 0, 6).series.is_zero())

    def test_t_multiplier(self):
        self.assertEqual(t_map().multiplier(), GaussianRational(-7, -24))

    def test_parametric_second_coefficient(self):
        flow = flow_solve_parametric(self.system, 6)
        self.assertEqual(flow.coeffs[2], Fraction(-2, 5) * UniPoly([0, -1, 1]))
        self.assertEqual(flow.cofactor(2), Fraction(-2, 5))
        self.assertEqual(flow.specialize(-4).series, flow_solve(self.system, -4, 6).series)

    def test_parametric_cap(self):
        with self.assertRaises(ValueError):
            flow_solve_parametric(self.system, PARAMETRIC_ORDER_CAP + 1)

    def test_flows_commute(self):
        self.assertTrue(flow_commutes(self.system, 2, Fraction(-1, 3), 8))

    def test_generator(self):
        f = infinitesimal_generator(self.system, len(F_PRINTED))
        self.assertEqual(f.coefficients(), F_PRINTED)
        self.assertEqual(f, flow_solve_parametric(self.system, len(F_PRINTED)).derivative_at_one())

    def test_delta(self):
        delta = delta_solve(len(DELTA_PRINTED))
        self.assertEqual(delta.coefficients(), DELTA_PRINTED)
        self.assertTrue(delta_residual(delta).is_zero())


class TestSuite(unittest.TestCase):

    def test_cheap_checks_pass(self):
        config = RunConfig(order=12)
        for check in rotabaxter.CHECKS:
            if check.id in ('rotabaxter.mad', 'rotabaxter.r-1/4', 'rotabaxter.delta'):
                self.assertEqual(check.func(config).status, PASS, check.id)

    def test_identifiers_are_unique(self):
        ids = [check.id for check in rotabaxter.CHECKS]
        self.assertEqual(len(ids), len(set(ids)))
        self.assertTrue(all(i.startswith('rotabaxter.') for i in ids))


if __name__ == '__main__':
    unittest.main()
