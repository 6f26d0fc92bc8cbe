# Truncated formal power and Laurent series over an exact coefficient field
#
# A series carries the exclusive bound `order` of its known coefficients:
# f = sum_{valuation <= k < order} c_k z^k + O(z^order). Binary operations
# return the largest order that is actually known, so identities are never
# claimed past the available precision.
#
# Anything that is not a TruncatedSeries is treated as a coefficient. Polynomials
# in z must be expanded with TruncatedSeries.from_poly before mixing.

import logging
from fractions import Fraction

from rg_isogeny.algebra.exactnum import UniPoly, conj, exact_div, field_of, to_text
from rg_isogeny.errors import (DivisionByZeroSeries, InnerConstantTerm, NonIntegrableTerm,
                               NonUnitConstantTerm, NotReversible)

logger = logging.getLogger(__name__)


def _power(c, k):
    if isinstance(c, int):
        c = Fraction(c)
    return c ** k


def _mul_lists(a, b, length):
    out = [0] * length
    for i, ca in enumerate(a):
        if i >= length:
            break
        if ca == 0:
            continue
        top = min(len(b), length - i)
        for j in range(top):
            cb = b[j]
            if cb != 0:
                out[i + j] += ca * cb
    return out


class TruncatedSeries(object):
    """
    Immutable truncated Laurent series.

    `coeffs[k]` is the coefficient of z^(valuation + k); the list always has
    order - valuation entries and the first one is nonzero. A series that is
    zero to its order has no coefficients and valuation == order.
    """

    __slots__ = ('valuation', 'coeffs', 'order')

    def __init__(self, coeffs, valuation=0, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = valuation + len(coeffs)
        coeffs = coeffs[:max(order - valuation, 0)]
        coeffs += [0] * (order - valuation - len(coeffs))
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        if start == len(coeffs):
            object.__setattr__(self, 'valuation', order)
            object.__setattr__(self, 'coeffs', ())
        else:
            object.__setattr__(self, 'valuation', valuation + start)
            object.__setattr__(self, 'coeffs', tuple(coeffs[start:]))
        object.__setattr__(self, 'order', order)

    def __setattr__(self, name, value):
        raise AttributeError('TruncatedSeries is immutable')

    # construction

    @classmethod
    def zero(cls, order):
        return cls((), order, order)

    @classmethod
    def constant(cls, value, order):
        return cls([value], 0, order)

    @classmethod
    def monomial(cls, k, order, coeff=1):
        return cls([coeff], k, order)

    @classmethod
    def variable(cls, order):
        return cls.monomial(1, order)

    @classmethod
    def from_poly(cls, poly, order):
        return cls(poly.coefficients(), 0, order)

    @classmethod
    def from_json(cls, data):
        from rg_isogeny.algebra.exactnum import rational
        return cls([rational(c) for c in data['coeffs']], data['valuation'], data['order'])

    def to_json(self):
        return {'valuation': self.valuation, 'order': self.order,
                'coeffs': [to_text(c) for c in self.coeffs]}

    # access

    def __getitem__(self, k):
        if k >= self.order:
            raise IndexError('coefficient {} is beyond the order {}'.format(k, self.order))
        if k < self.valuation:
            return 0
        return self.coeffs[k - self.valuation]

    def coefficients(self, start=0, stop=None):
        """ Coefficients of z^start .. z^(stop-1), stop defaulting to the order. """
        if stop is None:
            stop = self.order
        return [self[k] for k in range(start, stop)]

    def is_zero(self):
        return not self.coeffs

    @property
    def field(self):
        return field_of(self.coeffs)

    def leading(self):
        if not self.coeffs:
            raise DivisionByZeroSeries('series is zero to order {}'.format(self.order))
        return self.coeffs[0]

    def truncate(self, order):
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs, self.valuation, order)

    def map_coefficients(self, func):
        return TruncatedSeries([func(c) for c in self.coeffs], self.valuation, self.order)

    def conjugate(self):
        return self.map_coefficients(conj)

    def first_difference(self, other, order=None):
        """ Smallest exponent where the two series differ below the common order, else None. """
        if not isinstance(other, TruncatedSeries):
            other = self._lift(other)
        top = min(self.order, other.order)
        if order is not None:
            top = min(top, order)
        for k in range(min(self.valuation, other.valuation), top):
            if self[k] != other[k]:
                return k
        return None

    def agrees_with(self, other, order=None):
        return self.first_difference(other, order) is None

    # arithmetic

    def _lift(self, value):
        if self.order <= 0:
            return TruncatedSeries.zero(self.order)
        return TruncatedSeries([value], 0, self.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            if other == 0 or self.order <= 0:
                return self
            other = self._lift(other)
        order = min(self.order, other.order)
        low = min(self.valuation, other.valuation, order)
        out = [self[k] + other[k] if k < order else 0 for k in range(low, order)]
        return TruncatedSeries(out, low, order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.valuation, self.order)

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if isinstance(other, (int, Fraction)) and other == 0:
                return TruncatedSeries.zero(self.order)
            return TruncatedSeries([c * other for c in self.coeffs], self.valuation, self.order)
        return mul_capped(self, other)

    def __rmul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if isinstance(other, (int, Fraction)) and other == 0:
                return TruncatedSeries.zero(self.order)
            return TruncatedSeries([other * c for c in self.coeffs], self.valuation, self.order)
        return mul_capped(other, self)

    def inverse(self):
        """ 1/f for a series whose leading coefficient is invertible. """
        lead = self.leading()
        rel = self.order - self.valuation
        a = self.coeffs
        q = [0] * rel
        q[0] = exact_div(1, lead)
        for k in range(1, rel):
            acc = 0
            for j in range(1, min(k, len(a) - 1) + 1):
                if a[j] != 0:
                    acc += a[j] * q[k - j]
            q[k] = exact_div(-acc, lead)
        return TruncatedSeries(q, -self.valuation, -self.valuation + rel)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            if other == 0:
                raise DivisionByZeroSeries('division of a series by zero')
            return TruncatedSeries([exact_div(c, other) for c in self.coeffs], self.valuation, self.order)
        if other.is_zero():
            raise DivisionByZeroSeries('divisor is zero to order {}'.format(other.order))
        lead = other.coeffs[0]
        valuation = self.valuation - other.valuation
        rel = min(self.order - self.valuation, other.order - other.valuation)
        if self.is_zero():
            return TruncatedSeries.zero(valuation + rel)
        a, b = self.coeffs, other.coeffs
        q = [0] * rel
        for k in range(rel):
            acc = a[k] if k < len(a) else 0
            for j in range(1, min(k, len(b) - 1) + 1):
                if b[j] != 0:
                    acc = acc - b[j] * q[k - j]
            q[k] = exact_div(acc, lead)
        return TruncatedSeries(q, valuation, valuation + rel)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = None
        base = self
        while exponent:
            if exponent & 1:
                result = base if result is None else result * base
            exponent >>= 1
            if exponent:
                base = base * base
        if result is None:
            return TruncatedSeries.constant(1, self.order - self.valuation)
        return result

    def derive(self):
        out = [k * self[k] for k in range(self.valuation, self.order)]
        return TruncatedSeries(out, self.valuation - 1, self.order - 1)

    def integrate(self):
        out = []
        for k in range(self.valuation, self.order):
            c = self[k]
            if k == -1:
                if c != 0:
                    raise NonIntegrableTerm('series has a nonzero z^-1 term')
                out.append(0)
            else:
                out.append(exact_div(c, k + 1))
        return TruncatedSeries(out, self.valuation + 1, self.order + 1)

    def scale(self, factor):
        """ f(factor * z) """
        return TruncatedSeries([c * _power(factor, k) for k, c in enumerate(self.coeffs, self.valuation)],
                               self.valuation, self.order)

    def substitute_power(self, k):
        """ f(z^k) for a positive integer k. """
        if k < 1:
            raise ValueError('substitution exponent must be positive')
        out = [0] * ((self.order - self.valuation) * k)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return TruncatedSeries(out, self.valuation * k, self.order * k)

    def shift(self, k):
        """ z^k * f """
        return TruncatedSeries(self.coeffs, self.valuation + k, self.order + k)

    def compose(self, inner):
        """ self(inner) for an inner series with zero constant term. """
        if inner.is_zero():
            raise InnerConstantTerm('inner series is zero to order {}'.format(inner.order))
        if inner.valuation < 1:
            raise InnerConstantTerm('inner series must have positive valuation, got {}'.format(inner.valuation))
        vg = inner.valuation
        support = [k for k, c in enumerate(self.coeffs, self.valuation) if c != 0 and k != 0]
        order = vg * self.order
        if support:
            order = min(order, support[0] * vg + inner.order - vg)
        if self.valuation < 0:
            head = inner.inverse() ** (-self.valuation)
            regular = self.shift(-self.valuation)
        else:
            head = None
            regular = self
        # terms k with k*vg past the target order cannot contribute
        reach = order + max(-self.valuation, 0) * vg
        coeffs = regular.coefficients(0, min(regular.order, -(-reach // vg)))
        acc = TruncatedSeries.zero(reach)
        for c in reversed(coeffs):
            acc = mul_capped(acc, inner, reach)
            if c != 0:
                acc = acc + TruncatedSeries([c], 0, reach)
        if head is not None:
            acc = mul_capped(acc, head, order)
        return acc.truncate(order)

    def __call__(self, inner):
        return self.compose(inner)

    def reverse(self):
        """
        Compositional inverse g with f(g) = g(f) = z, solved order by order.

        pw[k][m] holds the coefficient of z^m in g^k; at step n only powers
        k >= 2 contribute to z^n through already known coefficients of g.
        """
        if self.valuation != 1:
            raise NotReversible('series must have valuation 1, got {}'.format(self.valuation))
        f1 = self.coeffs[0]
        order = self.order
        f = self.coefficients(0, order)
        g = [0] * order
        if order > 1:
            g[1] = exact_div(1, f1)
        pw = {1: g}
        for n in range(2, order):
            s = 0
            for k in range(2, n + 1):
                row = pw.get(k)
                if row is None:
                    row = [0] * order
                    pw[k] = row
                prev = pw[k - 1]
                acc = 0
                for j in range(1, n - k + 2):
                    if g[j] != 0 and prev[n - j] != 0:
                        acc += g[j] * prev[n - j]
                row[n] = acc
                if f[k] != 0:
                    s += f[k] * acc
            g[n] = exact_div(-s, f1)
        return TruncatedSeries(g, 0, order)

    def pow_frac(self, exponent):
        """ Binomial series of f^exponent for f with constant term exactly 1. """
        if self.valuation != 0 or self.coeffs[0] != 1:
            raise NonUnitConstantTerm('constant term must be 1 for a fractional power')
        exponent = Fraction(exponent)
        a = self.coeffs
        n = self.order
        b = [0] * n
        b[0] = 1
        for k in range(1, n):
            acc = 0
            for j in range(1, min(k, len(a) - 1) + 1):
                if a[j] != 0:
                    acc += ((exponent + 1) * j - k) * a[j] * b[k - j]
            b[k] = exact_div(acc, k)
        return TruncatedSeries(b, 0, n)

    # comparison and display

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.order == other.order and self.valuation == other.valuation
                and self.coeffs == other.coeffs)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.valuation, self.order, self.coeffs))

    def to_string(self, var='z', terms=None):
        parts = []
        shown = self.coeffs if terms is None else self.coeffs[:terms]
        for k, c in enumerate(shown, self.valuation):
            if c == 0:
                continue
            if k == 0:
                monomial = ''
            elif k == 1:
                monomial = var
            else:
                monomial = '{}^{}'.format(var, k)
            text = str(c)
            if isinstance(c, UniPoly) or ('+' in text[1:] or '-' in text[1:]):
                text = '(' + text + ')'
            if not monomial:
                parts.append(text)
            elif c == 1:
                parts.append(monomial)
            elif c == -1:
                parts.append('-' + monomial)
            else:
                parts.append(text + '*' + monomial)
        body = ' + '.join(parts).replace('+ -', '- ') if parts else '0'
        return '{} + O({}^{})'.format(body, var, self.order)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return 'TruncatedSeries({!r}, valuation={}, order={})'.format(list(self.coeffs), self.valuation,
                                                                      self.order)


def mul_capped(f, g, cap=None):
    """ f*g keeping only coefficients below `cap` (and below the attainable order). """
    valuation = f.valuation + g.valuation
    order = min(f.valuation + g.order, g.valuation + f.order)
    if cap is not None:
        order = min(order, cap)
    if f.is_zero() or g.is_zero() or order <= valuation:
        return TruncatedSeries.zero(order)
    out = _mul_lists(f.coeffs, g.coeffs, order - valuation)
    return TruncatedSeries(out, valuation, order)


def ts_arith(op, f, g=None):
    if op == 'add':
        return f + g
    if op == 'sub':
        return f - g
    if op == 'mul':
        return f * g
    if op == 'div':
        return f / g
    if op == 'derive':
        return f.derive()
    if op == 'integrate':
        return f.integrate()
    if op == 'scale':
        return f.scale(g)
    raise ValueError('unknown series operation {!r}'.format(op))


def ts_compose(f, g):
    return f.compose(g)


def ts_reverse(f):
    return f.reverse()


def ts_pow_frac(f, exponent):
    return f.pow_frac(exponent)


def geometric(order, ratio=1):
    """ 1/(1 - ratio*z) """
    return TruncatedSeries([_power(ratio, k) if k else 1 for k in range(order)], 0, order)


def series_of_poly(coeffs, order):
    return TruncatedSeries(coeffs, 0, order)
