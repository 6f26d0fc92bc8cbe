# Exact univariate rational functions and rational maps of two variables
#
# A RatFun is kept reduced: numerator and denominator are coprime and the
# lowest nonzero coefficient of the denominator is 1, so equality is
# structural. Composition goes through homogenised substitution, which keeps
# coprime inputs coprime and never needs a gcd.

import logging
from fractions import Fraction

from rg_isogeny.algebra.exactnum import (SCALAR_TYPES, MultiPoly, UniPoly, exact_div, field_of, poly_cancel,
                                         poly_gcd)
from rg_isogeny.algebra.series import TruncatedSeries
from rg_isogeny.errors import DegenerateComposition, DegreeCapExceeded, ZeroDenominator

logger = logging.getLogger(__name__)


def _as_poly(value):
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, SCALAR_TYPES):
        return UniPoly.constant(value)
    raise TypeError('cannot use {!r} as a polynomial'.format(value))


def _normalized(num, den):
    if not num:
        return UniPoly(), UniPoly.constant(1)
    lead = den[den.valuation()]
    if lead == 1:
        return num, den
    if lead == -1:
        return -num, -den
    return num / lead, den / lead


class RatFun(object):
    """
    Reduced quotient num/den of UniPolys.

    RatFun(num, den) reduces by a gcd; RatFun.coprime(num, den) trusts the
    caller and only normalises, which is what the catalog uses for its large
    printed maps.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if not den:
            raise ZeroDenominator('rational function with zero denominator')
        if num and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num / g
                den = den / g
        elif not num:
            den = UniPoly.constant(1)
        num, den = _normalized(num, den)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    def __setattr__(self, name, value):
        raise AttributeError('RatFun is immutable')

    @classmethod
    def coprime(cls, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if not den:
            raise ZeroDenominator('rational function with zero denominator')
        self = cls.__new__(cls)
        num, den = _normalized(num, den)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)
        return self

    @classmethod
    def variable(cls):
        return cls.coprime(UniPoly((0, 1)))

    @classmethod
    def constant(cls, value):
        return cls.coprime(UniPoly.constant(value))

    @classmethod
    def from_json(cls, data):
        return cls(UniPoly.from_json(data['num']), UniPoly.from_json(data['den']))

    def to_json(self):
        return {'num': self.num.to_json(), 'den': self.den.to_json()}

    # queries

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree, 0)

    def is_zero(self):
        return not self.num

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self):
        return self.den.degree == 0

    @property
    def field(self):
        return field_of([self.num, self.den])

    def multiplier(self):
        """ R'(0) for a map with R(0) = 0. """
        return self.series(2)[1]

    # arithmetic

    @staticmethod
    def _lift(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (UniPoly,) + SCALAR_TYPES):
            return RatFun.coprime(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            return RatFun.coprime(self.num * other.den + other.num * self.den, self.den * other.den)
        return RatFun(self.num * (other.den / g) + other.num * (self.den / g), (self.den / g) * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun.coprime(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFun.constant(0)
        # cross reduction keeps the product coprime
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        return RatFun.coprime((self.num / g1) * (other.num / g2), (self.den / g2) * (other.den / g1))

    __rmul__ = __mul__

    def reciprocal(self):
        if self.is_zero():
            raise ZeroDenominator('reciprocal of the zero rational function')
        return RatFun.coprime(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RatFun.coprime(self.num ** exponent, self.den ** exponent)

    def derivative(self):
        return RatFun(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num, self.den))

    # substitutions

    def __call__(self, x):
        if isinstance(x, RatFun):
            return rf_compose(self, x)
        if isinstance(x, UniPoly):
            return rf_compose(self, RatFun.coprime(x))
        if isinstance(x, TruncatedSeries):
            return self.num(x) / self.den(x)
        den = self.den(x)
        if den == 0:
            raise ZeroDenominator('pole at {}'.format(x))
        num = self.num(x)
        if isinstance(num, int) and isinstance(den, int):
            return Fraction(num, den)
        return num / den

    def scale(self, factor):
        """ z -> factor * z """
        return RatFun.coprime(self.num.scale_arg(factor), self.den.scale_arg(factor))

    def inverse_arg(self):
        """ z -> 1/z """
        k = self.degree
        return RatFun.coprime(self.num.reciprocal(k), self.den.reciprocal(k))

    def conjugate(self):
        return RatFun.coprime(self.num.conjugate(), self.den.conjugate())

    def series(self, order):
        return rf_series(self, order)

    def to_string(self, var='z'):
        if self.den == 1:
            return self.num.to_string(var)
        return '({})/({})'.format(self.num.to_string(var), self.den.to_string(var))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return 'RatFun({!r}, {!r})'.format(self.num, self.den)


def rf_normalize(num, den):
    return RatFun(num, den)


def rf_compose(f, g, cap=None):
    """
    f(g) for rational functions. With f = p/q of degree k and g = n/d the
    result is P(n, d)/Q(n, d) where P, Q are p, q homogenised to degree k.
    """
    if not isinstance(g, RatFun):
        g = RatFun.coprime(g)
    k = max(f.num.degree, f.den.degree, 0)
    expected = k * max(g.degree, 1)
    if cap is not None and expected > cap:
        raise DegreeCapExceeded(expected, cap)
    num = f.num.homogenize(g.num, g.den, k)
    den = f.den.homogenize(g.num, g.den, k)
    if not den:
        raise DegenerateComposition('composition collapses onto a pole of the outer function')
    logger.debug('composed degree %d with degree %d', f.degree, g.degree)
    return RatFun.coprime(num, den)


def rf_series(f, order):
    """ Laurent expansion of f at 0, known up to z^order. """
    v = f.den.valuation()
    unit = UniPoly(f.den.coeffs[v:])
    top = order + v
    if f.is_zero():
        return TruncatedSeries.zero(order)
    quotient = TruncatedSeries(f.num.coeffs, 0, max(top, 0)) / TruncatedSeries(unit.coeffs, 0, max(top, 1))
    return quotient.shift(-v).truncate(order)


# two variables

class BiRatFun(object):
    """
    Quotient of MultiPolys in (x, z), cancelled by sympy with the graded
    leading coefficient of the denominator set to 1. Equality is decided by
    cross-multiplication.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.constant(num, 2)
        if den is None:
            den = MultiPoly.constant(1, 2)
        elif not isinstance(den, MultiPoly):
            den = MultiPoly.constant(den, 2)
        if not den:
            raise ZeroDenominator('bivariate rational function with zero denominator')
        num, den = _reduced(num, den)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    def __setattr__(self, name, value):
        raise AttributeError('BiRatFun is immutable')

    @classmethod
    def variable(cls, index):
        return cls(MultiPoly.variable(index, 2))

    def total_degree(self):
        return max(self.num.total_degree(), self.den.total_degree())

    def __call__(self, x, z):
        """ Substitute BiRatFuns (or RatFuns in one variable) for x and z. """
        if isinstance(x, BiRatFun) and isinstance(z, BiRatFun):
            nums, dens = (x.num, z.num), (x.den, z.den)
            dx = max(self.num.degree_in(0), self.den.degree_in(0))
            dz = max(self.num.degree_in(1), self.den.degree_in(1))
            num = _substitute_cleared(self.num, nums, dens, (dx, dz))
            den = _substitute_cleared(self.den, nums, dens, (dx, dz))
            if not den:
                raise DegenerateComposition('composition collapses onto a pole')
            return BiRatFun(num, den)
        num = self.num.evaluate([x, z])
        den = self.den.evaluate([x, z])
        if den == 0:
            raise DegenerateComposition('substitution hits a pole')
        if isinstance(num, RatFun) or isinstance(den, RatFun):
            return RatFun._lift(num) / RatFun._lift(den)
        return exact_div(num, den)

    def equals(self, other):
        return self.num * other.den == other.num * self.den

    def to_string(self, names=('x', 'z')):
        return '({})/({})'.format(self.num.to_string(names), self.den.to_string(names))

    def __repr__(self):
        return 'BiRatFun({!r}, {!r})'.format(self.num, self.den)


def _substitute_cleared(poly, nums, dens, degrees):
    cache = {}

    def power(tag, i, k):
        key = (tag, i, k)
        if key not in cache:
            base = nums[i] if tag == 'n' else dens[i]
            cache[key] = base ** k
        return cache[key]

    result = MultiPoly(2)
    for e, c in poly.terms.items():
        term = MultiPoly.constant(c, 2)
        for i, k in enumerate(e):
            term = term * power('n', i, k) * power('d', i, degrees[i] - k)
        result = result + term
    return result


def _reduced(num, den):
    if not num:
        return num, MultiPoly.constant(1, 2)
    num, den = poly_cancel(num, den)
    _, lead = den.leading_term()
    if lead != 1:
        num = num * (Fraction(1) / lead)
        den = den * (Fraction(1) / lead)
    return num, den


class RatMap2(object):
    """ A rational map (x, z) -> (first, second). """

    __slots__ = ('first', 'second', 'label')

    def __init__(self, first, second, label=None):
        object.__setattr__(self, 'first', first)
        object.__setattr__(self, 'second', second)
        object.__setattr__(self, 'label', label)

    def __setattr__(self, name, value):
        raise AttributeError('RatMap2 is immutable')

    @classmethod
    def identity(cls):
        return cls(BiRatFun.variable(0), BiRatFun.variable(1), label=1)

    def total_degree(self):
        return max(self.first.total_degree(), self.second.total_degree())

    def __call__(self, x, z):
        return self.first(x, z), self.second(x, z)

    def __repr__(self):
        return 'RatMap2({!r}, {!r}, label={!r})'.format(self.first, self.second, self.label)


def map2_compose(outer, inner, cap=None):
    """ outer(inner(x, z)); labels multiply when both are known. """
    expected = outer.total_degree() * inner.total_degree()
    if cap is not None and expected > cap:
        raise DegreeCapExceeded(expected, cap)
    first = outer.first(inner.first, inner.second)
    second = outer.second(inner.first, inner.second)
    label = None
    if outer.label is not None and inner.label is not None:
        label = outer.label * inner.label
    return RatMap2(first, second, label)


def map2_equal(f, g):
    return f.first.equals(g.first) and f.second.equals(g.second)


def rf_to_json(f):
    return f.to_json()


def rf_from_json(data):
    return RatFun.from_json(data)
