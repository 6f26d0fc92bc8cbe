#!/usr/bin/env python3

import unittest
from fractions import Fraction

from rg_isogeny.algebra.diffop import (LinDiffOp, PowerConjugator, a_star, first_order_solution, gauss_operator,
                                       op_adjoint, op_equal_up_to_left_factor, op_pullback, residue_at_zero,
                                       sympow_factored_check)
from rg_isogeny.algebra.exactnum import Z
from rg_isogeny.algebra.ratfun import RatFun
from rg_isogeny.algebra.series import geometric
from rg_isogeny.errors import ConstantMap, IrrationalLogDerivative


class TestOperatorAlgebra(unittest.TestCase):

    def setUp(self):
        self.d = LinDiffOp.derivation()

    def test_leibniz_rule(self):
        # D o z = z D + 1
        self.assertEqual(self.d * Z, LinDiffOp([1, Z]))

    def test_left_multiplication(self):
        self.assertEqual(Z * self.d, LinDiffOp([0, Z]))

    def test_adjoint(self):
        self.assertEqual(op_adjoint(self.d), LinDiffOp([0, -1]))
        op = LinDiffOp([0, Z])
        self.assertEqual(op_adjoint(op_adjoint(op)), op)

    def test_equal_up_to_left_factor(self):
        self.assertTrue(op_equal_up_to_left_factor(LinDiffOp([1, Z]), LinDiffOp([2, 2 * Z])))
        self.assertFalse(op_equal_up_to_left_factor(LinDiffOp([1, Z]), LinDiffOp([1, 2 * Z])))


class TestTransformations(unittest.TestCase):

    def test_pullback_by_scaling(self):
        self.assertEqual(op_pullback(LinDiffOp.derivation(), RatFun(2 * Z)), LinDiffOp([0, Fraction(1, 2)]))

    def test_pullback_by_constant(self):
        with self.assertRaises(ConstantMap):
            op_pullback(LinDiffOp.derivation(), 3)

    def test_conjugate_by_power(self):
        # z^-1 o D o z = D + 1/z
        conjugator = PowerConjugator([(RatFun.variable(), 1)])
        self.assertEqual(LinDiffOp.derivation().conjugate_by_power(conjugator), LinDiffOp([RatFun(1, Z), 1]))

    def test_float_exponent_rejected(self):
        with self.assertRaises(IrrationalLogDerivative):
            PowerConjugator([(Z, 0.5)])

    def test_gauss_operator_kills_geometric_series(self):
        # 2F1(1, 1; 1; z) = 1/(1 - z)
        residual = gauss_operator(1, 1, 1).apply_series(geometric(12))
        self.assertTrue(residual.is_zero())


class TestFirstOrderSolution(unittest.TestCase):

    def test_residue(self):
        self.assertEqual(residue_at_zero(a_star()), Fraction(3, 4))

    def test_local_exponent(self):
        e, h = first_order_solution(a_star(), 10)
        self.assertEqual(e, Fraction(1, 4))
        self.assertEqual(h[0], 4)

    def test_symmetric_power_annihilates_powers(self):
        self.assertTrue(sympow_factored_check(a_star(), 2, order=12))


if __name__ == '__main__':
    unittest.main()
