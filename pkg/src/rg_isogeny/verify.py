#!/usr/bin/env python3
# coding=utf-8
#
# Command line front-end
#
# `verify` runs identity suites and prints a text or JSON report; `solve`,
# `hunt`, `pade-sing` and `catalog` expose the individual engines.
#
# Exit status: 0 every check passed, 1 a check failed, 2 configuration error.

import argparse
import json
import logging
import sys

import mpmath

from rg_isogeny.algebra.exactnum import GaussianRational, rational
from rg_isogeny.checks.catalog import catalog, export_entry
from rg_isogeny.checks.conjugation import build_triple, p_series_from_ode
from rg_isogeny.checks.padehunt import rational_hunt, singularity_scan, zs_constant
from rg_isogeny.checks.rotabaxter import flow_solve, flow_solve_parametric, preset
from rg_isogeny.config import RunConfig, log_level_from_env, parse_jobs
from rg_isogeny.constants import GUARD_DIGITS, SUITE_NAMES, SYSTEM_PRESETS
from rg_isogeny.errors import BadConfig, InsufficientOrder, UnknownPreset, UnknownSuite
from rg_isogeny.suites import run_suite

logger = logging.getLogger(__name__)

SERIES_PRESETS = {'P': p_series_from_ode,
                  'Q': lambda order: build_triple(order).q}

CONFIG_ERRORS = (BadConfig, UnknownSuite, UnknownPreset)


def exact_scalar(text):
    """ "p/q", or "re,im" for a Gaussian rational re + im i """
    try:
        if ',' in text:
            re, im = text.split(',')
            return GaussianRational(rational(re), rational(im)).simplify()
        return rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('{!r} is not an exact rational or "re,im" pair'.format(text))


def main(argv=None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', '-v', action='store_true', help='Log at DEBUG level')

    parser = argparse.ArgumentParser(prog='rg-isogeny',
                                     description='Exact checks of rational renormalization group symmetries')
    parser.set_defaults(verbose=False)

    action_parsers = parser.add_subparsers(dest='action')

    verify_parser = action_parsers.add_parser('verify', help='Run identity suites', parents=[common])
    verify_parser.add_argument('suite', nargs='?', default='all',
                               help='One of {} or all'.format(', '.join(SUITE_NAMES)))
    verify_parser.add_argument('--json', action='store_true', help='Print the report as JSON')
    verify_parser.add_argument('--output', '-o', type=str, help='Also write the JSON report to this file')
    verify_parser.add_argument('--jobs', '-j', type=str, help='Worker processes, a number or auto')
    verify_parser.add_argument('--order', type=int, help='Truncation order of the series checks')
    verify_parser.add_argument('--digits', type=int, help='Decimal digits of the numeric checks')
    verify_parser.add_argument('--degree-cap', type=int, help='Largest degree a composition may reach')

    solve_parser = action_parsers.add_parser('solve', help='Print a flow member order by order', parents=[common])
    solve_parser.add_argument('--system', '-s', type=str, default='main',
                              help='One of {} or gauss(a,b,c)'.format(', '.join(SYSTEM_PRESETS)))
    solve_parser.add_argument('--a1', type=exact_scalar, default=None, help='Multiplier R\'(0)')
    solve_parser.add_argument('--order', type=int, default=24)
    solve_parser.add_argument('--parametric', action='store_true', help='Coefficients as polynomials in a1')

    hunt_parser = action_parsers.add_parser('hunt', help='Search a rational flow member', parents=[common])
    hunt_parser.add_argument('--system', '-s', type=str, default='main')
    hunt_parser.add_argument('--a1', type=exact_scalar, required=True)
    hunt_parser.add_argument('--maxdeg', type=int, default=10)
    hunt_parser.add_argument('--order', type=int, help='Series order, at least 2 maxdeg + 8')

    sing_parser = action_parsers.add_parser('pade-sing', help='Locate singularities with Pade approximants',
                                            parents=[common])
    sing_parser.add_argument('--preset', choices=sorted(SERIES_PRESETS), default='P')
    sing_parser.add_argument('--order', type=int, default=200)
    sing_parser.add_argument('--digits', type=int, default=43)

    catalog_parser = action_parsers.add_parser('catalog', help='List the rational map catalog', parents=[common])
    catalog_parser.add_argument('--export', type=str, metavar='NAME', help='Print one entry as JSON')

    args = parser.parse_args(argv)

    try:
        level = logging.DEBUG if args.verbose else log_level_from_env()
    except BadConfig as e:
        print('error: {}'.format(e), file=sys.stderr)
        sys.exit(2)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')

    actions = {None: action_verify,
               'verify': action_verify,
               'solve': action_solve,
               'hunt': action_hunt,
               'pade-sing': action_pade_sing,
               'catalog': action_catalog}
    if args.action is None:
        args.suite, args.json, args.output, args.jobs = 'all', False, None, None
        args.order = args.digits = args.degree_cap = None

    try:
        sys.exit(actions[args.action](args))
    except CONFIG_ERRORS as e:
        print('error: {}'.format(e), file=sys.stderr)
        sys.exit(2)


def action_verify(args):
    config = RunConfig.from_env().override(order=args.order, digits=args.digits, degree_cap=args.degree_cap,
                                           jobs=parse_jobs(args.jobs) if args.jobs else None, json=args.json)
    report = run_suite(args.suite, config)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as f:
            f.write(report.dumps() + '\n')
        logger.info('report written to %s', args.output)
    print(report.dumps() if config.json else report.to_text())
    return report.exit_code()


def action_solve(args):
    system = preset(args.system)
    if args.parametric:
        flow = flow_solve_parametric(system, args.order)
        for n, c in enumerate(flow.coeffs):
            if c:
                print('a_{} = {}'.format(n, c.to_string('a1')))
        return 0
    if args.a1 is None:
        raise BadConfig('solve needs --a1 unless --parametric is given')
    print(flow_solve(system, args.a1, args.order).series.to_string())
    return 0


def action_hunt(args):
    order = args.order if args.order is not None else 2 * args.maxdeg + 8
    try:
        rmap = rational_hunt(preset(args.system), args.a1, args.maxdeg, order)
    except InsufficientOrder as e:
        raise BadConfig(str(e)) from e
    if rmap is None:
        print('no rational member of degree <= {} for a1 = {}'.format(args.maxdeg, args.a1))
        return 1
    print('R_{} = {}'.format(args.a1, rmap))
    return 0


def action_pade_sing(args):
    config = RunConfig.from_env().override(order=args.order, digits=args.digits)
    zs = zs_constant(config.digits)
    try:
        series = SERIES_PRESETS[args.preset](config.order)
        estimates = singularity_scan(series, config.digits, zs)
    except InsufficientOrder as e:
        raise BadConfig(str(e)) from e
    with mpmath.workdps(config.digits + GUARD_DIGITS):
        print('z_s = {}'.format(mpmath.nstr(zs, config.digits)))
        print('{:>40} {:>14} {:>22} {:>4}  {}'.format('location', 'modulus', 'z / z_s', 'mult', 'lattice'))
        for e in estimates:
            point = '' if e.lattice is None else '({}, {})'.format(e.lattice.m1, e.lattice.m2)
            print('{:>40} {:>14} {:>22} {:>4}  {}'.format(mpmath.nstr(e.location, 15), mpmath.nstr(e.modulus, 10),
                                                          mpmath.nstr(e.location / zs, 10), e.multiplicity, point))
    return 0


def action_catalog(args):
    if args.export:
        try:
            print(json.dumps(export_entry(args.export), indent=2))
        except KeyError as e:
            raise BadConfig(e.args[0]) from e
        return 0
    for name, e in catalog().items():
        a1 = '-' if e.a1 is None else str(e.a1)
        print('{:<8} degree {:>3}  a1 = {:<10} {}'.format(name, e.degree, a1, e.field))
    return 0


if __name__ == '__main__':
    main()
