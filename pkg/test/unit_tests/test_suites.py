#!/usr/bin/env python3

import unittest
from unittest import mock

from rg_isogeny import suites
from rg_isogeny.config import RunConfig
from rg_isogeny.constants import SUITES
from rg_isogeny.errors import BadConfig, UnknownSuite
from rg_isogeny.report import FAIL, PASS, Check, outcome


def _raises(config):
    raise ArithmeticError('boom')


def _bad_config(config):
    raise BadConfig('order too large')


def _silent_failure(config):
    return outcome(False)


FAKE = [
    Check('fake.raises', 'X1', _raises),
    Check('fake.config', 'X2', _bad_config),
    Check('fake.silent', 'X3', _silent_failure),
    Check('fake.ok', 'X4', lambda config: outcome(True)),
]


class TestRegistry(unittest.TestCase):

    def test_names(self):
        self.assertEqual(suites.suite_names('all'), list(SUITES))
        self.assertEqual(suites.suite_names('lattice'), ['lattice'])
        self.assertEqual(set(suites.REGISTRY), set(SUITES))

    def test_unknown_suite(self):
        with self.assertRaises(UnknownSuite):
            suites.suite_names('nope')

    def test_ids_are_unique(self):
        ids = [check.id for checks in suites.REGISTRY.values() for check in checks]
        self.assertEqual(len(ids), len(set(ids)))


@mock.patch.dict(suites.REGISTRY, {'fake': FAKE})
class TestRunCheck(unittest.TestCase):

    def setUp(self):
        self.config = RunConfig(order=12)

    def test_exception_is_a_failure(self):
        result = suites.run_check(('fake', 0, self.config))
        self.assertEqual(result.status, FAIL)
        self.assertEqual(result.witness, 'ArithmeticError: boom')
        self.assertEqual(result.anchor, 'X1')

    def test_bad_config_propagates(self):
        with self.assertRaises(BadConfig):
            suites.run_check(('fake', 1, self.config))

    def test_missing_witness(self):
        self.assertEqual(suites.run_check(('fake', 2, self.config)).witness, 'no witness recorded')

    def test_pass(self):
        result = suites.run_check(('fake', 3, self.config))
        self.assertEqual(result.status, PASS)
        self.assertGreaterEqual(result.ms, 0)


class TestRunSuite(unittest.TestCase):

    def test_lattice_serial(self):
        report = suites.run_suite('lattice', RunConfig(order=12, degree_cap=10, jobs=1))
        self.assertEqual([c.id for c in report.checks], ['lattice.ising', 'lattice.products', 'lattice.chi2'])
        self.assertEqual(report.exit_code(), 0)


if __name__ == '__main__':
    unittest.main()
