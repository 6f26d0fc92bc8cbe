#!/usr/bin/env python3

import pickle
import unittest
from fractions import Fraction

import mpmath

from rg_isogeny.algebra.exactnum import (I, GaussianRational, MultiPoly, UniPoly, agm_pi, bigfloat_constants,
                                         bipoly_divide_exact, exact_div, poly_cancel, poly_gcd, rational, to_mp,
                                         to_text)
from rg_isogeny.errors import NotDivisible, PrecisionUnreachable


class TestScalars(unittest.TestCase):

    def test_exact_div_keeps_integers_exact(self):
        self.assertEqual(exact_div(1, 3), Fraction(1, 3))
        self.assertIsInstance(exact_div(6, 3), Fraction)

    def test_gaussian_arithmetic(self):
        z = GaussianRational(1, 2)
        self.assertEqual(z * z.conjugate(), 5)
        self.assertEqual((1 + 2 * I) ** 2, GaussianRational(-3, 4))
        self.assertEqual(1 / I, -I)
        self.assertEqual(z / z, 1)

    def test_real_gaussian_equals_fraction(self):
        self.assertEqual(GaussianRational(Fraction(1, 2), 0), Fraction(1, 2))
        self.assertEqual(hash(GaussianRational(3, 0)), hash(Fraction(3)))
        self.assertEqual(GaussianRational(7, 0).simplify(), Fraction(7))

    def test_rational_parsing(self):
        self.assertEqual(rational('-7/24'), Fraction(-7, 24))
        self.assertEqual(rational({'re': '-7', 'im': '24'}), GaussianRational(-7, 24))
        self.assertEqual(rational({'re': '3', 'im': '0'}), Fraction(3))

    def test_to_text(self):
        self.assertEqual(to_text(Fraction(-2, 5)), '-2/5')
        self.assertEqual(to_text(GaussianRational(1, -1)), {'re': '1/1', 'im': '-1/1'})


class TestUniPoly(unittest.TestCase):

    def test_trailing_zeros_dropped(self):
        self.assertEqual(UniPoly([1, 2, 0, 0]).degree, 1)
        self.assertEqual(UniPoly().degree, -1)
        self.assertTrue(UniPoly([0, 0]).is_zero())

    def test_divmod(self):
        p = UniPoly([-1, 0, 0, 1])
        q, r = divmod(p, UniPoly([-1, 1]))
        self.assertEqual(q, UniPoly([1, 1, 1]))
        self.assertTrue(r.is_zero())

    def test_exact_division_raises(self):
        with self.assertRaises(NotDivisible):
            UniPoly([1, 0, 1]) / UniPoly([-1, 1])

    def test_gcd_is_monic(self):
        a = UniPoly([-1, 1]) * UniPoly([2, 1]) * 3
        b = UniPoly([-1, 1]) * UniPoly([5, 1])
        self.assertEqual(poly_gcd(a, b), UniPoly([-1, 1]))
        self.assertEqual(poly_gcd(UniPoly([2, 4]), UniPoly()), UniPoly([Fraction(1, 2), 1]))

    def test_homogenize(self):
        # den^2 * p(num/den) for p = 1 + z^2, num = z, den = 1 - z
        p = UniPoly([1, 0, 1])
        result = p.homogenize(UniPoly([0, 1]), UniPoly([1, -1]))
        self.assertEqual(result, UniPoly([1, -2, 2]))

    def test_reciprocal_and_scale(self):
        p = UniPoly([1, 2, 3])
        self.assertEqual(p.reciprocal(), UniPoly([3, 2, 1]))
        self.assertEqual(p.reciprocal(4), UniPoly([0, 0, 3, 2, 1]))
        self.assertEqual(p.scale_arg(2), UniPoly([1, 4, 12]))

    def test_gaussian_coefficients(self):
        p = UniPoly([1, I])
        self.assertEqual(p * p.conjugate(), UniPoly([1, 0, 1]))

    def test_copy_of_product(self):
        p = UniPoly([1, -2, 5]) * UniPoly([1, 52, -26, -12, 1])
        self.assertEqual(UniPoly(p), p)
        self.assertEqual(UniPoly(p).degree, 6)
        self.assertEqual(list(p), list(p.coeffs))
        self.assertEqual(len(list(p)), 7)

    def test_coefficients_are_exact(self):
        p = UniPoly([1, 2])
        self.assertEqual(p.coeffs, (Fraction(1), Fraction(2)))
        self.assertIsInstance(p[0], Fraction)
        self.assertEqual(p[5], 0)
        self.assertEqual(UniPoly([0, 0, 3]).valuation(), 2)

    def test_ground_domain(self):
        self.assertFalse(UniPoly([Fraction(1, 2), 0, 3]).rep.ring.domain.is_QQ_I)
        self.assertTrue(UniPoly([1, I]).rep.ring.domain.is_QQ_I)
        # real results move back to QQ
        q = UniPoly([1, I]) + UniPoly([0, -I])
        self.assertFalse(q.rep.ring.domain.is_QQ_I)
        self.assertEqual(q, 1)

    def test_from_poly_element(self):
        p = UniPoly([1, 1]) ** 2
        self.assertEqual(UniPoly(p.rep * 2), UniPoly([2, 4, 2]))
        self.assertEqual(p.derivative(), UniPoly([2, 2]))

    def test_gaussian_gcd(self):
        self.assertEqual(poly_gcd(UniPoly([1, 0, 1]), UniPoly([-I, 1])), UniPoly([-I, 1]))

    def test_cancel(self):
        p, q = poly_cancel(UniPoly([-1, 0, 1]) * 2, UniPoly([1, -2, 1]))
        self.assertEqual(q.degree, 1)
        self.assertEqual(p * UniPoly([-1, 1]), q * UniPoly([2, 2]))

    def test_pickle(self):
        p = UniPoly([Fraction(1, 3), I])
        self.assertEqual(pickle.loads(pickle.dumps(p)), p)
        self.assertEqual(pickle.loads(pickle.dumps(GaussianRational(1, 2))), GaussianRational(1, 2))

    def test_to_string(self):
        self.assertEqual(UniPoly([1, -1, 2]).to_string(), '1 - z + 2*z^2')
        self.assertEqual(UniPoly([0, 1]).to_string('a1'), 'a1')


class TestMultiPoly(unittest.TestCase):

    def test_divide_exact(self):
        x, y = MultiPoly.variables(2)
        f = (x * y - 4096) * (x ** 2 - x * y ** 2 + 3)
        self.assertEqual(bipoly_divide_exact(f, x * y - 4096), x ** 2 - x * y ** 2 + 3)

    def test_divide_not_divisible(self):
        x, y = MultiPoly.variables(2)
        with self.assertRaises(NotDivisible):
            (x ** 2 + y).divide_exact(x * y - 1)

    def test_permute_and_degrees(self):
        x, y = MultiPoly.variables(2)
        f = x ** 3 * y + 2 * y ** 2
        self.assertEqual(f.permute((1, 0)), y ** 3 * x + 2 * x ** 2)
        self.assertEqual(f.total_degree(), 4)
        self.assertEqual(f.degree_in(1), 2)

    def test_evaluate_and_clear_denominators(self):
        u, v = MultiPoly.variables(2)
        f = u - v ** 2
        self.assertEqual(f.evaluate([9, 3]), 0)
        # u = z^2/(1+z)^2, v = z/(1+z) lies on u = v^2
        cleared = f.clear_denominators([UniPoly([0, 0, 1]), UniPoly([0, 1])],
                                       [UniPoly([1, 2, 1]), UniPoly([1, 1])])
        self.assertTrue(cleared.is_zero())

    def test_derivative(self):
        x, y = MultiPoly.variables(2)
        self.assertEqual((x ** 2 * y).derivative(0), 2 * x * y)

    def test_cancel(self):
        x, y = MultiPoly.variables(2)
        p, q = poly_cancel((x + y) * (x - y), (x + y) * x)
        self.assertEqual(q.total_degree(), 1)
        self.assertEqual(p * x, q * (x - y))

    def test_pickle(self):
        x, y = MultiPoly.variables(2)
        f = x ** 2 * y - Fraction(1, 3)
        self.assertEqual(pickle.loads(pickle.dumps(f)), f)


class TestConstants(unittest.TestCase):

    def test_agm_pi(self):
        with mpmath.workdps(60):
            self.assertLess(abs(agm_pi(50) - mpmath.pi), mpmath.mpf(10) ** -50)

    def test_gamma_reflection(self):
        c = bigfloat_constants(40)
        with mpmath.workdps(50):
            self.assertLess(abs(c['gamma_1_4'] - mpmath.gamma(mpmath.mpf(1) / 4)), mpmath.mpf(10) ** -40)
            self.assertLess(abs(c['gamma_1_4'] * c['gamma_3_4'] - mpmath.pi * mpmath.sqrt(2)), mpmath.mpf(10) ** -40)

    def test_digit_bounds(self):
        with self.assertRaises(PrecisionUnreachable):
            bigfloat_constants(5)
        with self.assertRaises(PrecisionUnreachable):
            bigfloat_constants(10 ** 6)

    def test_to_mp(self):
        with mpmath.workdps(30):
            self.assertEqual(to_mp(Fraction(1, 4)), mpmath.mpf('0.25'))
            self.assertEqual(to_mp(GaussianRational(1, -1)), mpmath.mpc(1, -1))


if __name__ == '__main__':
    unittest.main()
