# Gauss hypergeometric series, numeric values and pullback identities
#
# Identities are compared over Q or Q(i) on unit-constant series: every
# prefactor base must equal 1 at z = 0, so its rational power is a series with
# exact coefficients and any scalar root is folded into the identity constant.

import json
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from rg_isogeny.algebra.diffop import LinDiffOp, PowerConjugator
from rg_isogeny.algebra.exactnum import GaussianRational, UniPoly, _check_digits, rational, to_mp, to_text
from rg_isogeny.algebra.ratfun import RatFun, rf_from_json, rf_series, rf_to_json
from rg_isogeny.algebra.series import TruncatedSeries, ts_pow_frac
from rg_isogeny.constants import GUARD_DIGITS
from rg_isogeny.errors import BadC, DivergentPoint, NonComposablePullback, PrecisionUnreachable

logger = logging.getLogger(__name__)

IDENTITIES_FILE = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data', 'identities.json')


def _is_nonpositive_integer(value):
    return value == int(value) and value <= 0


@dataclass(frozen=True)
class F21Params:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ('a', 'b', 'c'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if _is_nonpositive_integer(self.c):
            raise BadC('c = {} is a nonpositive integer'.format(self.c))

    def swapped(self):
        return F21Params(self.b, self.a, self.c)

    def to_json(self):
        return {'a': to_text(self.a), 'b': to_text(self.b), 'c': to_text(self.c)}

    @classmethod
    def from_json(cls, data):
        return cls(rational(data['a']), rational(data['b']), rational(data['c']))

    def __str__(self):
        return '[{}, {}], [{}]'.format(self.a, self.b, self.c)


def f21_series(p, order):
    """ sum (a)_n (b)_n / ((c)_n n!) z^n up to z^order by the term ratio """
    if _is_nonpositive_integer(p.c):
        raise BadC('c = {} is a nonpositive integer'.format(p.c))
    coeffs = []
    term = Fraction(1)
    for n in range(order):
        coeffs.append(term)
        term = term * (p.a + n) * (p.b + n) / ((p.c + n) * (n + 1))
    return TruncatedSeries(coeffs, 0, order)


def gauss_operator(p):
    """ z(1-z) D^2 + (c - (a+b+1) z) D - ab """
    return LinDiffOp([-p.a * p.b, UniPoly([p.c, -(p.a + p.b + 1)]), UniPoly([0, 1, -1])])


def euler_second_solution_check(p, order):
    """ x^(1-c) 2F1(1+a-c, 1+b-c; 2-c; x) is annihilated by the Gauss operator of p. """
    second = F21Params(1 + p.a - p.c, 1 + p.b - p.c, 2 - p.c)
    twisted = gauss_operator(p).conjugate_by_power(PowerConjugator([(RatFun.variable(), 1 - p.c)]))
    return twisted.apply_series(f21_series(second, order)).is_zero()


@dataclass
class PullbackIdentity:
    """
    left(left_arg) = constant * prod(base^exponent) * right(right_arg)

    Both arguments vanish at z = 0 and every prefactor base is 1 there.
    """

    name: str
    left: F21Params
    left_arg: RatFun
    right: F21Params
    right_arg: RatFun
    prefactor: list = field(default_factory=list)
    constant: object = Fraction(1)
    anchor: str = ''
    order: int = 40

    def __post_init__(self):
        for base, _ in self.prefactor:
            if base(0) != 1:
                raise ValueError('{}: prefactor base {} is not 1 at z = 0'.format(self.name, base))

    @property
    def field(self):
        values = [self.constant]
        for f in (self.left_arg, self.right_arg):
            values.extend(f.num.coefficients() + f.den.coefficients())
        for base, _ in self.prefactor:
            values.extend(base.num.coefficients() + base.den.coefficients())
        if any(isinstance(v, GaussianRational) and v.im != 0 for v in values):
            return 'Q(i)'
        return 'Q'

    def to_json(self):
        return {'name': self.name,
                'anchor': self.anchor,
                'order': self.order,
                'left': dict(self.left.to_json(), arg=rf_to_json(self.left_arg)),
                'right': dict(self.right.to_json(), arg=rf_to_json(self.right_arg)),
                'prefactor': [{'base': rf_to_json(b), 'exponent': to_text(e)} for b, e in self.prefactor],
                'constant': to_text(self.constant)}

    @classmethod
    def from_json(cls, data):
        return cls(name=data['name'],
                   left=F21Params.from_json(data['left']),
                   left_arg=rf_from_json(data['left']['arg']),
                   right=F21Params.from_json(data['right']),
                   right_arg=rf_from_json(data['right']['arg']),
                   prefactor=[(rf_from_json(item['base']), rational(item['exponent']))
                              for item in data.get('prefactor', [])],
                   constant=rational(data.get('constant', '1')),
                   anchor=data.get('anchor', ''),
                   order=data.get('order', 40))


def _argument_series(arg, order, side):
    if arg.den(0) == 0 or arg(0) != 0:
        raise NonComposablePullback('{} argument {} does not vanish at 0'.format(side, arg))
    return rf_series(arg, order)


def pullback_sides(identity, order):
    """ The two sides of the identity as exact series to z^order. """
    left = f21_series(identity.left, order)(_argument_series(identity.left_arg, order, 'left'))
    right = f21_series(identity.right, order)(_argument_series(identity.right_arg, order, 'right'))
    for base, exponent in identity.prefactor:
        right = right * ts_pow_frac(rf_series(base, order), exponent)
    return left, right * identity.constant


def check_pullback_identity(identity, order):
    left, right = pullback_sides(identity, order)
    index = left.first_difference(right)
    if index is not None:
        logger.debug('%s: sides differ at z^%d', identity.name, index)
    return index is None


def load_identities(path=IDENTITIES_FILE):
    with open(path, encoding='utf-8') as f:
        data = json.load(f)
    return [PullbackIdentity.from_json(record) for record in data['identities']]


# numerics

def f21_value(p, z, digits):
    """ 2F1 at |z| < 1 by direct summation of the series. """
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        z = mpmath.mpmathify(z)
        if abs(z) >= 1:
            raise DivergentPoint('|z| = {} is outside the disc of convergence'.format(mpmath.nstr(abs(z), 10)))
        value = mpmath.hyp2f1(to_mp(p.a), to_mp(p.b), to_mp(p.c), z)
    return +value


def gauss_quotient(p, digits):
    """ Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) """
    if p.c - p.a - p.b <= 0:
        raise DivergentPoint('2F1 diverges at z = 1 when c - a - b = {} <= 0'.format(p.c - p.a - p.b))
    with mpmath.workdps(digits + GUARD_DIGITS):
        a, b, c = to_mp(p.a), to_mp(p.b), to_mp(p.c)
        return mpmath.gamma(c) * mpmath.gamma(c - a - b) / (mpmath.gamma(c - a) * mpmath.gamma(c - b))


def euler_integral_value(p, z, digits, pencil=False):
    """
    Euler integral of 2F1 by tanh-sinh quadrature,

        Gamma(c) / (Gamma(b) Gamma(c-b)) int_0^1 w^(b-1) (1-w)^(c-b-1) (1-zw)^(-a) dw.

    The range is split at 1/2. On [0, 1/2] w = s^(1/b) and on [1/2, 1]
    1 - w = t^(1/e), with e = c - b, or e = c - a - b at z = 1, so that both
    integrands are bounded and never evaluated near w = 1. With pencil set,
    a and b trade places: this is z^-a int_0^z u^(a-1) (1-u/z)^(c-1-a) (1-u)^(-b) du
    after u = z w.
    """
    _check_digits(digits)
    a, b = (p.b, p.a) if pencil else (p.a, p.b)
    if not 0 < b < p.c:
        a, b = b, a
    if not 0 < b < p.c:
        raise DivergentPoint('no Euler integral for {}: need 0 < b < c'.format(p))
    at_one = z == 1
    e = p.c - a - b if at_one else p.c - b
    if e <= 0:
        raise DivergentPoint('the Euler integral of {} diverges at z = 1'.format(p))
    with mpmath.workdps(digits + GUARD_DIGITS):
        am, bm, cm, em = to_mp(a), to_mp(b), to_mp(p.c), to_mp(e)
        z = mpmath.mpmathify(z)
        half = mpmath.mpf(1) / 2

        def near_zero(s):
            w = s ** (1 / bm)
            return (1 - w) ** (cm - bm - 1) * (1 - z * w) ** (-am)

        def near_one(t):
            w = 1 - t ** (1 / em)
            if at_one:
                return w ** (bm - 1)
            return w ** (bm - 1) * (1 - z * w) ** (-am)

        left = mpmath.quad(near_zero, [0, half ** bm]) / bm
        right = mpmath.quad(near_one, [0, half ** em]) / em
        norm = mpmath.gamma(cm) / (mpmath.gamma(bm) * mpmath.gamma(cm - bm))
        value = norm * (left + right)
    return +value


def gauss_at_1(p, digits):
    """
    2F1 at z = 1 from the Gamma quotient, cross-checked by quadrature of the
    Euler integral. Raises PrecisionUnreachable when the routes disagree to
    digits - 5.
    """
    _check_digits(digits)
    quotient = gauss_quotient(p, digits)
    integral = euler_integral_value(p, 1, digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        if abs(quotient - integral) > abs(quotient) * mpmath.mpf(10) ** (5 - digits):
            raise PrecisionUnreachable('Gamma quotient {} and Euler integral {} disagree'.format(
                mpmath.nstr(quotient, 20), mpmath.nstr(integral, 20)))
    logger.debug('2F1(%s; 1) = %s', p, mpmath.nstr(quotient, 20))
    return quotient


def contiguity_check(p, order):
    """ c * d/dz 2F1(a, b; c) = ab * 2F1(a+1, b+1; c+1) """
    shifted = F21Params(p.a + 1, p.b + 1, p.c + 1)
    lhs = f21_series(p, order + 1).derive() * p.c
    rhs = f21_series(shifted, order) * (p.a * p.b)
    return lhs.agrees_with(rhs)


def series_value(series, z):
    """ Numeric partial sum of an exact series at z, at the current precision. """
    total = mpmath.mpf(0)
    power = mpmath.mpf(1)
    z = mpmath.mpmathify(z)
    for k in range(series.order):
        if k >= series.valuation:
            c = series[k]
            if c != 0:
                total += to_mp(c) * power
        power *= z
    return total


def zs_value(digits):
    """ -4 * 2F1([1/4, 1/2], [5/4]; 1)^4 """
    value = gauss_at_1(F21Params(Fraction(1, 4), Fraction(1, 2), Fraction(5, 4)), digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        return -4 * value ** 4
