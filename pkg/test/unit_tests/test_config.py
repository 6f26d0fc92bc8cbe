#!/usr/bin/env python3

import logging
import os
import unittest
from unittest import mock

from rg_isogeny.config import RunConfig, log_level_from_env, parse_jobs
from rg_isogeny.errors import BadConfig


class TestRunConfig(unittest.TestCase):

    def test_defaults(self):
        config = RunConfig()
        self.assertEqual((config.order, config.digits, config.degree_cap, config.jobs), (40, 40, 400, None))

    def test_validation(self):
        for kwargs in ({'order': 1}, {'digits': 5}, {'digits': 10 ** 6}, {'degree_cap': 0}, {'jobs': 0}):
            with self.assertRaises(BadConfig, msg=str(kwargs)):
                RunConfig(**kwargs)

    def test_override_skips_none(self):
        config = RunConfig().override(order=12, digits=None, jobs=None)
        self.assertEqual(config.order, 12)
        self.assertEqual(config.digits, 40)

    def test_snapshot(self):
        expected = {'order': 40, 'digits': 40, 'degree_cap': 400, 'jobs': 'auto'}
        self.assertEqual(RunConfig(json=True).snapshot(), expected)
        self.assertEqual(RunConfig(jobs=2).snapshot()['jobs'], 2)


class TestJobs(unittest.TestCase):

    def test_parse(self):
        self.assertIsNone(parse_jobs('auto'))
        self.assertIsNone(parse_jobs(None))
        self.assertEqual(parse_jobs('3'), 3)

    def test_invalid(self):
        for value in ('many', '0', '-2'):
            with self.assertRaises(BadConfig, msg=value):
                parse_jobs(value)


class TestEnvironment(unittest.TestCase):

    @mock.patch.dict(os.environ, {'RG_ISOGENY_ORDER': '24', 'RG_ISOGENY_JOBS': '2'})
    def test_from_env(self):
        config = RunConfig.from_env()
        self.assertEqual(config.order, 24)
        self.assertEqual(config.jobs, 2)

    @mock.patch.dict(os.environ, {'RG_ISOGENY_DIGITS': 'lots'})
    def test_from_env_not_an_integer(self):
        with self.assertRaises(BadConfig):
            RunConfig.from_env()

    @mock.patch.dict(os.environ, {'RG_ISOGENY_LOG_LEVEL': 'debug'})
    def test_log_level(self):
        self.assertEqual(log_level_from_env(), logging.DEBUG)

    @mock.patch.dict(os.environ, {'RG_ISOGENY_LOG_LEVEL': 'chatty'})
    def test_unknown_log_level(self):
        with self.assertRaises(BadConfig):
            log_level_from_env()


if __name__ == '__main__':
    unittest.main()
