#!/usr/bin/env python3

import argparse
import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from rg_isogeny.algebra.exactnum import GaussianRational
from rg_isogeny.verify import exact_scalar, main


def run(argv):
    """ main(argv) -> (exit code, stdout) """
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            main(argv)
        except SystemExit as e:
            return e.code, out.getvalue()
    raise AssertionError('main returned without an exit status')


class TestExactScalar(unittest.TestCase):

    def test_rational(self):
        self.assertEqual(exact_scalar('-4'), -4)
        self.assertEqual(exact_scalar('2/3'), Fraction(2, 3))

    def test_gaussian(self):
        self.assertEqual(exact_scalar('-7,-24'), GaussianRational(-7, -24))
        self.assertEqual(exact_scalar('5,0'), 5)

    def test_invalid(self):
        for text in ('x', '1/0', '1,2,3'):
            with self.assertRaises(argparse.ArgumentTypeError, msg=text):
                exact_scalar(text)


class TestCommands(unittest.TestCase):

    def test_catalog(self):
        code, out = run(['catalog'])
        self.assertEqual(code, 0)
        self.assertIn('R81', out)

    def test_catalog_export(self):
        code, out = run(['catalog', '--export', 'R-4'])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['degree'], 2)

    def test_configuration_errors(self):
        for argv in (['verify', 'nope'], ['catalog', '--export', 'R7'], ['solve'],
                     ['solve', '--system', 'nope', '--a1', '1'], ['verify', 'lattice', '--order', '1'],
                     ['verify', 'lattice', '--jobs', 'many']):
            self.assertEqual(run(argv)[0], 2, argv)

    def test_solve(self):
        code, out = run(['solve', '--a1', '-4', '--order', '6'])
        self.assertEqual(code, 0)
        self.assertTrue(out.strip())

    def test_hunt(self):
        code, out = run(['hunt', '--a1', '-4', '--maxdeg', '4', '--order', '16'])
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('R_-4 = '))

    def test_hunt_order_too_low(self):
        self.assertEqual(run(['hunt', '--a1', '-4', '--maxdeg', '4', '--order', '12'])[0], 2)

    def test_verify_json(self):
        code, out = run(['verify', 'lattice', '--json', '--order', '12', '--degree-cap', '10', '--jobs', '1'])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data['suite'], 'lattice')
        self.assertEqual(data['summary']['fail'], 0)


if __name__ == '__main__':
    unittest.main()
