#!/usr/bin/env python3

import unittest

from rg_isogeny.algebra.exactnum import MultiPoly
from rg_isogeny.checks import lattice
from rg_isogeny.checks.lattice import (COMMUTATION_CAP, Chi2Witness, chi2_reduction, composite_maps,
                                       ising_maps_verify, product_identities, product_identity, t2, t3)
from rg_isogeny.config import RunConfig
from rg_isogeny.errors import BadConfig
from rg_isogeny.report import PASS

_, Z, _, _ = MultiPoly.variables(4)


class TestIsingMaps(unittest.TestCase):

    def test_zero_field_is_a_power(self):
        self.assertTrue(t2().reduces_to_power())
        self.assertTrue(t3().reduces_to_power())

    def test_t2_t3_commute(self):
        self.assertTrue(t2().commutes_with(t3(), COMMUTATION_CAP))

    def test_composite_labels(self):
        t4 = t2().compose(t2())
        self.assertEqual(t4.label, 4)
        self.assertTrue(t4.reduces_to_power())

    def test_cap_skips_composites(self):
        self.assertEqual(set(composite_maps(10)), {2, 3, 4})
        self.assertEqual(set(composite_maps(1)), {2, 3})

    def test_verify_small_cap(self):
        self.assertEqual([label for label, ok in ising_maps_verify(10) if not ok], [])


class TestProducts(unittest.TestCase):

    def test_bases(self):
        for base in (2, 3, 5):
            self.assertTrue(product_identity(base, 30), base)

    def test_order_cap(self):
        with self.assertRaises(BadConfig):
            product_identities(300)


class TestChi2(unittest.TestCase):

    def test_reduction(self):
        self.assertEqual([label for label, ok in chi2_reduction() if not ok], [])

    def test_broken_pencil_fails(self):
        printed = Chi2Witness.printed()
        broken = Chi2Witness(pencil=printed.pencil + Z, two_w_a=printed.two_w_a, w_c=printed.w_c)
        failed = [label for label, ok in chi2_reduction(broken) if not ok]
        self.assertEqual(failed, ['w-pencil'])

    def test_suite_checks(self):
        config = RunConfig(order=12, degree_cap=10)
        for check in lattice.CHECKS:
            self.assertEqual(check.func(config).status, PASS, check.id)


if __name__ == '__main__':
    unittest.main()
