#!/usr/bin/env python3

import unittest
from fractions import Fraction

from rg_isogeny.algebra.exactnum import GaussianRational, MultiPoly
from rg_isogeny.checks.conjugation import (build_triple, flow_conjugacy_check, inverted, minus_four_relation,
                                           nonlinear_residuals, order_one_inversion_symmetry, order_one_residual,
                                           p_series_from_ode, painleve_eta, painleve_residual, sn_series)
from rg_isogeny.constants import ETA_HALF_PRINTED, P_PRINTED, Q_PRINTED
from rg_isogeny.errors import InsufficientOrder

ORDER = 12


class TestTriple(unittest.TestCase):

    def setUp(self):
        self.triple = build_triple(ORDER)

    def test_printed_coefficients(self):
        self.assertEqual(self.triple.q.coefficients(0, len(Q_PRINTED)), Q_PRINTED)
        self.assertEqual(self.triple.p.coefficients(0, len(P_PRINTED)), P_PRINTED)

    def test_relations(self):
        self.assertEqual(self.triple.inconsistencies(), [])

    def test_minimum_order(self):
        with self.assertRaises(InsufficientOrder):
            build_triple(4)

    def test_flow_conjugacy(self):
        self.assertTrue(flow_conjugacy_check(-4, ORDER))
        self.assertTrue(flow_conjugacy_check(Fraction(2, 3), ORDER))

    def test_flow_conjugacy_complex(self):
        self.assertTrue(flow_conjugacy_check(GaussianRational(-7, -24), 40))

    def test_minus_four_denominator(self):
        corrected, index = minus_four_relation(ORDER)
        self.assertTrue(corrected)
        # -4P/(1 - P^2) already differs at z^2
        self.assertEqual(index, 2)


class TestNonlinearEquations(unittest.TestCase):

    def test_p_from_recurrence(self):
        p = p_series_from_ode(ORDER)
        self.assertTrue(p.agrees_with(build_triple(ORDER).p))
        self.assertTrue(painleve_residual(p).is_zero())
        self.assertTrue(order_one_residual(p).is_zero())

    def test_residuals_at_high_order(self):
        for name, ok in nonlinear_residuals(60):
            self.assertTrue(ok, name)

    def test_inversion_symmetry(self):
        self.assertTrue(order_one_inversion_symmetry())

    def test_inversion_weight_too_small(self):
        z, p, q = MultiPoly.variables(3)
        with self.assertRaises(ValueError):
            inverted(q ** 4, 2)

    def test_eta_half(self):
        solution = painleve_eta(Fraction(1, 2), len(ETA_HALF_PRINTED))
        self.assertEqual(solution.series.coefficients(), ETA_HALF_PRINTED)

    def test_sinus(self):
        sn = sn_series(10)
        self.assertTrue(sn.residual().is_zero())
        self.assertEqual(sn.series[3], 0)
        self.assertEqual(sn.series[5], Fraction(-1, 10))


if __name__ == '__main__':
    unittest.main()
