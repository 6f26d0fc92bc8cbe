#!/usr/bin/env python3

import unittest

from rg_isogeny.algebra.exactnum import GaussianRational
from rg_isogeny.checks.catalog import (PALINDROME_IDENTITY, PALINDROME_INVERSE, catalog, catalog_verify, checksum_ok,
                                       commute_or_series, composition_multiplier, entry, export_entry,
                                       hauptconj_check, magic_identities, pairwise_commute, palindromy_check)
from rg_isogeny.constants import D_81, D_2401
from rg_isogeny.report import PASS


class TestCatalog(unittest.TestCase):

    def test_names(self):
        self.assertEqual(set(catalog()), {'R-4', 'R16', 'R-64', 'J', 'T', 'T*', 'R81', 'R625', 'R2401', 'R14641',
                                          'R28561'})

    def test_unknown_entry(self):
        with self.assertRaises(KeyError):
            entry('R7')

    def test_family_multiplier_and_degree(self):
        r81 = entry('R81')
        self.assertEqual(r81.a1, 81)
        self.assertEqual(r81.degree, 9)
        self.assertEqual(r81.rmap.multiplier(), 81)
        self.assertEqual(entry('R28561').degree, 169)

    def test_fields(self):
        self.assertEqual(entry('T').field, 'Q(i)')
        self.assertEqual(entry('T').a1, GaussianRational(-7, -24))
        self.assertEqual(entry('R625').field, 'Q')

    def test_export(self):
        data = export_entry('R-4')
        self.assertEqual(data['degree'], 2)
        self.assertEqual(data['a1'], '-4/1')
        self.assertEqual(data['map'], {'num': ['0/1', '-4/1'], 'den': ['1/1', '-2/1', '1/1']})


class TestIdentities(unittest.TestCase):

    def test_small_entries_verify(self):
        for name in ('R-4', 'R16', 'J', 'R81'):
            self.assertEqual(catalog_verify(entry(name)).status, PASS, name)

    def test_commutation(self):
        self.assertTrue(pairwise_commute(entry('R-4'), entry('R81')))
        # past the degree cap the series compositions are compared instead
        self.assertTrue(commute_or_series(entry('R-4'), entry('R81'), cap=1, order=12))

    def test_composition_multiplier(self):
        self.assertEqual(composition_multiplier(entry('R-4'), entry('R16')), -64)

    def test_checksums(self):
        self.assertTrue(checksum_ok(D_81))
        self.assertTrue(checksum_ok(D_2401))
        self.assertFalse(checksum_ok([1, 6, -2]))

    def test_magic_identities(self):
        self.assertEqual(magic_identities(entry('R81')), (True, True))

    def test_palindromy(self):
        self.assertEqual(palindromy_check(entry('R-4')), PALINDROME_IDENTITY)
        self.assertEqual(palindromy_check(entry('R81')), PALINDROME_INVERSE)

    def test_hauptmodul_conjugation(self):
        self.assertTrue(hauptconj_check(0))
        self.assertTrue(hauptconj_check(1))


if __name__ == '__main__':
    unittest.main()
