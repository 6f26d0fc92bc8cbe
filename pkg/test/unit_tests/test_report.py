#!/usr/bin/env python3

import json
import unittest

from rg_isogeny.config import RunConfig
from rg_isogeny.report import FAIL, PASS, REPORT, CheckResult, SuiteReport, outcome, reported


class TestOutcome(unittest.TestCase):

    def test_outcome(self):
        self.assertEqual(outcome(True).status, PASS)
        self.assertEqual(outcome(False, {'index': 3}), (FAIL, {'index': 3}))
        self.assertEqual(reported('printed 1 - P^2').status, REPORT)


class TestSuiteReport(unittest.TestCase):

    def setUp(self):
        self.report = SuiteReport(['lattice'], RunConfig(order=12))
        self.report.extend([
            CheckResult('lattice.ising', 'TMN', PASS, None, 1.5),
            CheckResult('lattice.chi2', 'C1', REPORT, 'printed form differs', 0.2),
        ])

    def test_summary(self):
        self.assertEqual(self.report.summary(), {PASS: 1, FAIL: 0, REPORT: 1})
        self.assertEqual(self.report.exit_code(), 0)

    def test_failure_sets_exit_code(self):
        self.report.add(CheckResult('lattice.products', 'TN', FAIL, {'failed': ['base 2']}, 3.0))
        self.assertEqual([c.id for c in self.report.failed()], ['lattice.products'])
        self.assertEqual(self.report.exit_code(), 1)

    def test_json(self):
        data = json.loads(self.report.dumps())
        self.assertEqual(data['suite'], 'lattice')
        self.assertEqual(data['config']['order'], 12)
        self.assertEqual(data['checks'][1]['witness'], 'printed form differs')
        self.assertEqual(SuiteReport(['a', 'b'], RunConfig()).to_json()['suite'], ['a', 'b'])

    def test_text(self):
        lines = self.report.to_text().split('\n')
        self.assertTrue(lines[0].startswith('PASS'))
        self.assertIn('printed form differs', lines[1])
        self.assertEqual(lines[-1], '1 passed, 0 failed, 1 reported')


if __name__ == '__main__':
    unittest.main()
