# Linear differential operators with rational function coefficients
#
# An operator sum c_k(z) D^k is stored as the list c_0 .. c_r of RatFuns.
# Products are operator compositions: L * M is L o M, and a RatFun f on
# either side is the multiplication operator, so L * f is L o f while f * L
# multiplies every coefficient.

import logging
from fractions import Fraction

from rg_isogeny.algebra.exactnum import SCALAR_TYPES, UniPoly, exact_div
from rg_isogeny.algebra.ratfun import RatFun, rf_compose, rf_series
from rg_isogeny.algebra.series import TruncatedSeries
from rg_isogeny.errors import ConstantMap, IrrationalLogDerivative, NonSolvableOrder

logger = logging.getLogger(__name__)


def _lift(value):
    if isinstance(value, RatFun):
        return value
    return RatFun.coprime(value)


class LinDiffOp(object):

    __slots__ = ('coeffs',)

    def __init__(self, coeffs):
        coeffs = [_lift(c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError('LinDiffOp is immutable')

    @classmethod
    def derivation(cls):
        return cls([0, 1])

    @classmethod
    def first_order(cls, a):
        """ D + a """
        return cls([a, 1])

    @classmethod
    def multiplication(cls, f):
        return cls([f])

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return RatFun.constant(0)

    # algebra

    def __add__(self, other):
        if not isinstance(other, LinDiffOp):
            other = LinDiffOp([other])
        size = max(len(self.coeffs), len(other.coeffs))
        return LinDiffOp([self[k] + other[k] for k in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return LinDiffOp([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, LinDiffOp):
            other = LinDiffOp([other])
        return self + (-other)

    def left_multiply(self, f):
        f = _lift(f)
        return LinDiffOp([f * c for c in self.coeffs])

    def derive_left(self):
        """ D o self """
        out = [RatFun.constant(0)] * (len(self.coeffs) + 1)
        for j, c in enumerate(self.coeffs):
            out[j] = out[j] + c.derivative()
            out[j + 1] = out[j + 1] + c
        return LinDiffOp(out)

    def __mul__(self, other):
        if not isinstance(other, LinDiffOp):
            if isinstance(other, (RatFun, UniPoly) + SCALAR_TYPES):
                other = LinDiffOp([other])
            else:
                return NotImplemented
        return op_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (RatFun, UniPoly) + SCALAR_TYPES):
            return self.left_multiply(other)
        return NotImplemented

    def __pow__(self, exponent):
        result = LinDiffOp([1])
        for _ in range(exponent):
            result = result * self
        return result

    def monic(self):
        lead = self.leading
        return LinDiffOp([c / lead for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, LinDiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coeffs)

    # transformations

    def adjoint(self):
        return op_adjoint(self)

    def pullback(self, rmap):
        return op_pullback(self, rmap)

    def conjugate_by_power(self, conjugator):
        return op_conjugate_by_power(self, conjugator)

    def apply_series(self, f):
        return op_apply_series(self, f)

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def to_string(self):
        parts = []
        for k in range(self.order, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            d = '' if k == 0 else ('D' if k == 1 else 'D^{}'.format(k))
            if c == 1 and d:
                parts.append(d)
            else:
                parts.append('({})'.format(c) + ('*' + d if d else ''))
        return ' + '.join(parts) if parts else '0'

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return 'LinDiffOp({!r})'.format(list(self.coeffs))


class PowerConjugator(object):
    """ Formal product of RatFun bases raised to rational exponents. """

    def __init__(self, factors):
        clean = []
        for base, exponent in factors:
            if isinstance(exponent, float):
                raise IrrationalLogDerivative('exponent {} is not rational'.format(exponent))
            base = _lift(base)
            if base.is_zero():
                raise IrrationalLogDerivative('zero base has no logarithmic derivative')
            clean.append((base, Fraction(exponent)))
        self.factors = clean

    def inverse(self):
        return PowerConjugator([(b, -e) for b, e in self.factors])

    def log_derivative(self):
        total = RatFun.constant(0)
        for base, exponent in self.factors:
            if exponent != 0 and not base.is_constant():
                total = total + exponent * (base.derivative() / base)
        return total

    def __repr__(self):
        return 'PowerConjugator({!r})'.format(self.factors)


def op_mul(left, right):
    """ left o right """
    result = LinDiffOp([])
    power = right
    for i, a in enumerate(left.coeffs):
        if i:
            power = power.derive_left()
        if not a.is_zero():
            result = result + power.left_multiply(a)
    return result


def op_from_factors(factors):
    result = LinDiffOp([1])
    for factor in factors:
        result = result * factor
    return result


def op_left_multiply(op, f):
    return op.left_multiply(f)


def op_monic(op):
    return op.monic()


def op_equal_up_to_left_factor(first, second):
    return first.order == second.order and first.monic() == second.monic()


def op_adjoint(op):
    """ sum (-D)^k o c_k """
    result = LinDiffOp([])
    for k, c in enumerate(op.coeffs):
        term = LinDiffOp([c])
        for _ in range(k):
            term = term.derive_left()
        result = result + (term if k % 2 == 0 else -term)
    return result


def op_pullback(op, rmap):
    """
    Operator acting on y(R(z)) obtained from `op` acting on y: every
    coefficient is composed with R and D becomes C(z) D with C = 1/R'.
    """
    rmap = _lift(rmap)
    if rmap.is_constant():
        raise ConstantMap('pullback by a constant map')
    cofactor = rmap.derivative().reciprocal()
    result = LinDiffOp([])
    power = LinDiffOp([1])
    for k, c in enumerate(op.coeffs):
        if k:
            power = power.derive_left().left_multiply(cofactor)
        if not c.is_zero():
            result = result + power.left_multiply(rf_compose(c, rmap))
    return result


def op_conjugate_by_power(op, conjugator):
    """ C^-1 o op o C, using C^-1 o D o C = D + C'/C """
    shift = conjugator.log_derivative()
    step = LinDiffOp([shift, 1])
    result = LinDiffOp([])
    power = LinDiffOp([1])
    for k, c in enumerate(op.coeffs):
        if k:
            power = step * power
        if not c.is_zero():
            result = result + power.left_multiply(c)
    return result


def op_apply_series(op, f):
    """ op(f) to the attainable order """
    if op.is_zero():
        return TruncatedSeries.zero(f.order)
    reach = f.order + op.order + 2
    result = None
    derived = f
    for k, c in enumerate(op.coeffs):
        if k:
            derived = derived.derive()
        if c.is_zero():
            continue
        term = rf_series(c, reach) * derived
        result = term if result is None else result + term
    if result is None:
        return TruncatedSeries.zero(f.order - op.order)
    return result


def omega_k(a, k):
    """ D + k*A """
    return LinDiffOp.first_order(k * _lift(a))


def omega_k_transform(a, rmap, k):
    """ pullback of D + kA by R equals C^(k+1) o (D + kA) o C^(-k), C = 1/R' """
    cofactor = _lift(rmap).derivative().reciprocal()
    op = omega_k(a, k)
    expected = (op * (cofactor ** (-k))).left_multiply(cofactor ** (k + 1))
    return op_pullback(op, rmap) == expected


def symmetric_power_product(a, n):
    """ (D + nA) o ... o (D + A) o D """
    return op_from_factors([omega_k(a, k) for k in range(n, 0, -1)] + [LinDiffOp.derivation()])


def symmetric_power_recursive(a, n):
    """ The variant S_N = (D + A) o S_(N-1) with S_1 = (D + A) o D. """
    return op_from_factors([omega_k(a, 1) for _ in range(n)] + [LinDiffOp.derivation()])


def residue_at_zero(a):
    a = _lift(a)
    v = a.den.valuation()
    if v == 0:
        return Fraction(0)
    if v > 1:
        raise ValueError('coefficient has a pole of order {} at 0'.format(v))
    return exact_div(a.num[0], a.den[1])


def first_order_solution(a, order):
    """
    Local solution of (D + A) o D with y(0) = 0, as (e, h): y = z^e * h(z).

    y' = z^-rho * u(z) with rho the residue of A at 0 and u' = -(A - rho/z) u.
    """
    rho = residue_at_zero(a)
    e = 1 - rho
    regular = rf_series(_lift(a), order + 1) - TruncatedSeries.monomial(-1, order + 1, rho)
    b = regular.coefficients(0, order)
    u = [Fraction(1)] + [0] * (order - 1)
    for n in range(order - 1):
        acc = 0
        for i in range(n + 1):
            if b[i] != 0:
                acc += b[i] * u[n - i]
        u[n + 1] = exact_div(-acc, n + 1)
    h = []
    for n in range(order):
        if n + e == 0:
            raise NonSolvableOrder(n)
        h.append(exact_div(u[n], n + e))
    return e, TruncatedSeries(h, 0, order)


def annihilates_powers(op, a, n, order):
    """ True iff op kills y^j for j = 0 .. n, y the local solution of (D + A) o D. """
    e, h = first_order_solution(a, order)
    z = RatFun.variable()
    power = TruncatedSeries.constant(1, order)
    for j in range(n + 1):
        twisted = op.conjugate_by_power(PowerConjugator([(z, e * j)]))
        residual = twisted.apply_series(power)
        if not residual.is_zero():
            logger.debug('power %d not annihilated, first term at z^%d', j, residual.valuation)
            return False
        power = power * h
    return True


def sympow_factored_check(a, n, order=30):
    return annihilates_powers(symmetric_power_product(a, n), a, n, order)


# printed operators, coefficient lists c_0 .. c_r

def _rf(num, den=(1,)):
    return RatFun(UniPoly(num), UniPoly(den))


def a_star():
    """ A* = (3 - 5z) / (4 z (1 - z)) """
    return _rf([3, -5], [0, 4, -4])


def omega_printed():
    return LinDiffOp([0, a_star(), 1])


def vic2_printed():
    return LinDiffOp([0, _rf([Fraction(3, 8), Fraction(-15, 8)], [0, 0, 1, -1]),
                      _rf([Fraction(9, 4), Fraction(-15, 4)], [0, 1, -1]), 1])


def omega_q_printed():
    four_a = _rf([3, -5], [0, 1, -1])
    factors = [LinDiffOp.first_order(four_a * Fraction(k, 4)) for k in (4, 3, 2, 1)]
    return op_from_factors(factors + [LinDiffOp.derivation()])


def omega_f_printed():
    return LinDiffOp([_rf([Fraction(3, 4), Fraction(-6, 4), Fraction(5, 4)], [0, 0, 1, -2, 1]),
                      _rf([Fraction(-3, 4), Fraction(5, 4)], [0, 1, -1]), 1])


def omega_f_pullback_printed():
    """ The monic operator obtained from Omega_F under z -> -4z/(1-z)^2. """
    den1 = UniPoly([0, 1]) * UniPoly([1, -1]) * UniPoly([1, 1])
    den0 = den1 * den1
    return LinDiffOp([RatFun(UniPoly([Fraction(3, 4), 3, Fraction(50, 4), 3, Fraction(3, 4)]), den0),
                      RatFun(UniPoly([Fraction(-3, 4), Fraction(-30, 4), Fraction(-11, 4)]), den1), 1])


def h0_printed():
    return LinDiffOp([-1, UniPoly([10, -14]), UniPoly([0, 8, -8])])


def h1_printed():
    return LinDiffOp([_rf([4], [1, -1]), UniPoly([10, -6]), UniPoly([0, 8, -8])])


def h2_printed():
    # -2 (3z - 1)(z + 5)/(z + 1) and 16 (z - 1)/(z + 1)^2
    return LinDiffOp([_rf([-16, 16], [1, 2, 1]), _rf([10, -28, -6], [1, 1]), UniPoly([0, 8, -8])])


def gauss_operator(a, b, c):
    """ z(1-z) D^2 + (c - (a+b+1) z) D - ab """
    return LinDiffOp([-a * b, UniPoly([c, -(a + b + 1)]), UniPoly([0, 1, -1])])
