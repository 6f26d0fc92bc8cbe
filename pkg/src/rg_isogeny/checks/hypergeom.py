# Gauss hypergeometric identity corpus and series sanity checks

import logging
import random
from fractions import Fraction

import mpmath

from rg_isogeny.algebra.exactnum import bigfloat_constants
from rg_isogeny.algebra.hypergeom import (F21Params, check_pullback_identity, contiguity_check,
                                          euler_second_solution_check, f21_series, gauss_at_1, load_identities)
from rg_isogeny.algebra.series import TruncatedSeries
from rg_isogeny.constants import GUARD_DIGITS
from rg_isogeny.report import Check, outcome

logger = logging.getLogger(__name__)

SAMPLES = 6

IDENTITIES = load_identities()


def _random_params(rng):
    a = Fraction(rng.randint(1, 11), rng.randint(2, 13))
    b = Fraction(rng.randint(1, 11), rng.randint(2, 13))
    c = Fraction(rng.randint(7, 29), 7)
    return F21Params(a, b, c)


def arctanh_series(order):
    """ z 2F1([1, 1/2], [3/2]; z^2) """
    return f21_series(F21Params(1, Fraction(1, 2), Fraction(3, 2)), order).substitute_power(2).shift(1).truncate(order)


def _check_identity(index):
    def check(config):
        identity = IDENTITIES[index]
        return outcome(check_pullback_identity(identity, identity.order), {'field': identity.field})
    return check


def _check_symmetry(config):
    rng = random.Random(config.order)
    bad = []
    for _ in range(SAMPLES):
        p = _random_params(rng)
        if f21_series(p, config.order) != f21_series(p.swapped(), config.order):
            bad.append(str(p))
    return outcome(not bad, {'failed': bad} if bad else None)


def _check_contiguity(config):
    rng = random.Random(config.order + 1)
    bad = [str(p) for p in (_random_params(rng) for _ in range(SAMPLES)) if not contiguity_check(p, config.order)]
    return outcome(not bad, {'failed': bad} if bad else None)


def _check_second_solution(config):
    params = [F21Params(Fraction(1, 4), Fraction(1, 2), Fraction(5, 4)),
              F21Params(Fraction(1, 12), Fraction(5, 12), Fraction(1, 2)),
              F21Params(Fraction(1, 3), Fraction(2, 3), Fraction(4, 3))]
    bad = [str(p) for p in params if not euler_second_solution_check(p, config.order)]
    return outcome(not bad, {'failed': bad} if bad else None)


def _check_arctanh(config):
    order = config.order
    expected = TruncatedSeries([Fraction(1, k) if k % 2 else 0 for k in range(order)], 0, order)
    return outcome(arctanh_series(order) == expected)


def _check_gauss_at_1(config):
    digits = config.digits
    value = gauss_at_1(F21Params(Fraction(1, 4), Fraction(1, 2), Fraction(5, 4)), digits)
    constants = bigfloat_constants(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        closed = constants['pi'] ** (mpmath.mpf(3) / 2) * mpmath.sqrt(2) / (4 * constants['gamma_3_4'] ** 2)
        error = abs(value - closed)
        ok = error < mpmath.mpf(10) ** (5 - digits)
    return outcome(ok, {'value': mpmath.nstr(value, 30), 'error': mpmath.nstr(error, 5)})


CHECKS = [Check('hypergeom.' + identity.name, identity.anchor, _check_identity(index))
          for index, identity in enumerate(IDENTITIES)] + [
    Check('hypergeom.symmetry', 'gauss', _check_symmetry),
    Check('hypergeom.contiguity', 'gauss', _check_contiguity),
    Check('hypergeom.second-solution', 'gauss', _check_second_solution),
    Check('hypergeom.arctanh', 'Rsaoud', _check_arctanh),
    Check('hypergeom.gauss-at-1', 'radius', _check_gauss_at_1),
]
