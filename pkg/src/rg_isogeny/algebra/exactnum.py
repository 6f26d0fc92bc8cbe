# Exact scalars, polynomials and the high-precision constants
#
# Rationals are fractions.Fraction and Gaussian rationals are defined here;
# they are the coefficients the truncated series work with. Polynomials wrap
# sympy sparse polynomials over QQ, or over QQ_I once a coefficient has a
# nonzero imaginary part, so gcd, exact division and cancellation come from
# sympy.polys. Every value is immutable.
#
# Numeric constants use mpmath at a working precision of `digits` plus
# GUARD_DIGITS decimal digits.

import logging
from fractions import Fraction
from functools import lru_cache

import mpmath
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from rg_isogeny.constants import DIGITS_CAP, GUARD_DIGITS
from rg_isogeny.errors import NotDivisible, PrecisionUnreachable


logger = logging.getLogger(__name__)

Rational = Fraction


def rational(value):
    """ Parse an int, Fraction, "p/q" string or {"re","im"} record into an exact scalar. """
    if isinstance(value, (Fraction, GaussianRational)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, dict):
        return GaussianRational(rational(value['re']), rational(value['im'])).simplify()
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError('cannot read {!r} as an exact scalar'.format(value))


def to_text(value):
    """ Serialise an exact scalar as "p/q", Gaussian rationals as {"re": .., "im": ..} """
    if isinstance(value, GaussianRational):
        return {'re': to_text(value.re), 'im': to_text(value.im)}
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def exact_div(a, b):
    # int / int would give a float
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def conj(value):
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value


def field_of(values):
    for value in values:
        if isinstance(value, GaussianRational) and value.im != 0:
            return 'Q(i)'
        if isinstance(value, (UniPoly, MultiPoly)) and value.rep.ring.domain.is_QQ_I:
            return 'Q(i)'
    return 'Q'


class GaussianRational(object):
    """
    Element re + im*i of Q(i), with both parts held as Fractions.

    Mixed arithmetic with int and Fraction is supported on both sides. A value
    with zero imaginary part compares and hashes equal to the matching Fraction.
    """

    __slots__ = ('re', 'im')

    def __init__(self, re=0, im=0):
        object.__setattr__(self, 're', Fraction(re))
        object.__setattr__(self, 'im', Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError('GaussianRational is immutable')

    def __reduce__(self):
        return GaussianRational, (self.re, self.im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def simplify(self):
        """ Return a Fraction when the imaginary part vanishes. """
        if self.im == 0:
            return self.re
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError('division of a Gaussian rational by zero')
            return GaussianRational(self.re / other, self.im / other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError('division of a Gaussian rational by zero')
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self ** -exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return 'GaussianRational({!r}, {!r})'.format(self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return '{}i'.format(self.im)
        sign = '+' if self.im > 0 else '-'
        return '{}{}{}i'.format(self.re, sign, abs(self.im))


I = GaussianRational(0, 1)

SCALAR_TYPES = (int, Fraction, GaussianRational)


def _format_coefficient(coeff, monomial):
    text = str(coeff)
    if isinstance(coeff, GaussianRational) and coeff.im != 0 and coeff.re != 0:
        text = '(' + text + ')'
    if not monomial:
        return text
    if coeff == 1:
        return monomial
    if coeff == -1:
        return '-' + monomial
    return text + '*' + monomial


# sympy ground domains

@lru_cache(maxsize=None)
def poly_ring(nvars, gaussian=False):
    """ The sympy ring Q[z], or Q[x0, .., x(n-1)] for several variables; Q(i) when `gaussian`. """
    if nvars < 1:
        raise ValueError('a polynomial ring needs at least one variable')
    names = 'z' if nvars == 1 else ','.join('x{}'.format(i) for i in range(nvars))
    return ring(names, QQ_I if gaussian else QQ)[0]


def _qq(value):
    return QQ(value.numerator, value.denominator)


def to_ground(value, domain):
    """ Exact scalar as an element of the sympy domain QQ or QQ_I. """
    if isinstance(value, GaussianRational):
        re, im = value.re, value.im
    elif isinstance(value, (int, Fraction)):
        re, im = Fraction(value), Fraction(0)
    else:
        raise TypeError('cannot use {!r} as a polynomial coefficient'.format(value))
    if domain.is_QQ_I:
        return QQ_I(_qq(re), _qq(im))
    if im:
        raise TypeError('{} does not lie in Q'.format(value))
    return _qq(re)


def from_ground(value):
    """ QQ or QQ_I element back to a Fraction or GaussianRational. """
    if isinstance(value, QQ_I.dtype):
        return GaussianRational(from_ground(value.x), from_ground(value.y)).simplify()
    return Fraction(int(value.numerator), int(value.denominator))


def _from_terms(nvars, terms):
    gaussian = any(isinstance(c, GaussianRational) and c.im != 0 for c in terms.values())
    target = poly_ring(nvars, gaussian)
    return target.from_dict({e: to_ground(c, target.domain) for e, c in terms.items() if c != 0})


def _canonical(rep):
    # real coefficients always live over QQ
    if rep.ring.domain.is_QQ_I and all(not c.y for c in rep.values()):
        return poly_ring(rep.ring.ngens).from_dict({e: c.x for e, c in rep.items()})
    return rep


def _common(a, b):
    if a.ring == b.ring:
        return a, b
    if a.ring.ngens != b.ring.ngens:
        raise ValueError('mixing polynomials in {} and {} variables'.format(a.ring.ngens, b.ring.ngens))
    target = poly_ring(a.ring.ngens, True)
    return a.set_ring(target), b.set_ring(target)


class UniPoly(object):
    """
    Univariate polynomial over Q or Q(i), held as a sympy PolyElement `rep`.

    UniPoly(coeffs) takes coefficients low degree first (ints, Fractions or
    GaussianRationals), another UniPoly or a PolyElement of poly_ring(1).
    `coeffs` gives them back as Fractions and GaussianRationals. A polynomial
    with real coefficients is always kept over QQ, so equal polynomials have
    equal representations.
    """

    __slots__ = ('rep', '_coeffs')

    def __init__(self, coeffs=()):
        if isinstance(coeffs, UniPoly):
            rep = coeffs.rep
        elif isinstance(coeffs, PolyElement):
            if coeffs.ring not in (poly_ring(1), poly_ring(1, True)):
                raise ValueError('{} is not a polynomial in z over Q or Q(i)'.format(coeffs))
            rep = _canonical(coeffs)
        else:
            rep = _from_terms(1, {(k,): c for k, c in enumerate(coeffs)})
        object.__setattr__(self, 'rep', rep)
        object.__setattr__(self, '_coeffs', None)

    def __setattr__(self, name, value):
        raise AttributeError('UniPoly is immutable')

    def __reduce__(self):
        return UniPoly, (self.coeffs,)

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self):
        if self._coeffs is None:
            coeffs = [Fraction(0)] * (self.degree + 1)
            for (k,), c in self.rep.items():
                coeffs[k] = from_ground(c)
            object.__setattr__(self, '_coeffs', tuple(coeffs))
        return self._coeffs

    @property
    def degree(self):
        """ -1 for the zero polynomial """
        if not self.rep:
            return -1
        return self.rep.degree()

    @property
    def leading(self):
        return from_ground(self.rep.LC) if self.rep else 0

    def coefficients(self):
        return self.coeffs

    def __getitem__(self, k):
        c = self.rep.get((k,))
        return 0 if c is None else from_ground(c)

    def __iter__(self):
        return iter(self.coeffs)

    def valuation(self):
        if not self.rep:
            return None
        return min(e[0] for e in self.rep)

    def is_zero(self):
        return not self.rep

    def __bool__(self):
        return bool(self.rep)

    def __len__(self):
        return self.degree + 1

    # arithmetic

    @staticmethod
    def _lift(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, SCALAR_TYPES):
            return UniPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = _common(self.rep, other.rep)
        return UniPoly(a + b)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-self.rep)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = _common(self.rep, other.rep)
        return UniPoly(a - b)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = _common(self.rep, other.rep)
        return UniPoly(a * b)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return UniPoly(self.rep ** exponent)

    def __divmod__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError('polynomial division by zero')
        a, b = _common(self.rep, other.rep)
        quot, rem = a.div(b)
        return UniPoly(quot), UniPoly(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError('polynomial division by zero')
        a, b = _common(self.rep, other.rep)
        if b.is_ground:
            return UniPoly(a.quo_ground(b.LC))
        try:
            return UniPoly(a.exquo(b))
        except ExactQuotientFailed:
            raise NotDivisible('{} does not divide {}'.format(other, self))

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.rep.ring == other.rep.ring and self.rep == other.rep

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coeffs)

    # evaluation and substitution

    def __call__(self, x):
        """ Horner evaluation; `x` may be a scalar, an mpmath number, UniPoly, RatFun or TruncatedSeries. """
        coeffs = self.coeffs
        if isinstance(x, (mpmath.mpf, mpmath.mpc)):
            coeffs = [to_mp(c) for c in coeffs]
        if not coeffs:
            return 0 * x if not isinstance(x, SCALAR_TYPES) else 0
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * x + c
        if isinstance(acc, SCALAR_TYPES) and not isinstance(x, SCALAR_TYPES):
            # constant polynomial evaluated at a non-scalar
            return x * 0 + acc
        return acc

    def compose(self, other):
        return self(other)

    def homogenize(self, num, den, degree=None):
        """ Return sum c_i * num^i * den^(degree - i); this is den^degree * self(num/den). """
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError('homogenization degree below polynomial degree')
        one = UniPoly.constant(1)
        num_powers = [one]
        for _ in range(self.degree):
            num_powers.append(num_powers[-1] * num)
        den_powers = [one]
        for _ in range(degree):
            den_powers.append(den_powers[-1] * den)
        result = UniPoly()
        for i, c in enumerate(self.coeffs):
            if c != 0:
                result = result + num_powers[i] * den_powers[degree - i] * c
        return result

    def derivative(self):
        return UniPoly(self.rep.diff(0))

    def monic(self):
        return UniPoly(self.rep.monic())

    def shift(self, k):
        """ Multiply by z^k (k >= 0). """
        return UniPoly(self.rep.mul_monom((k,)))

    def reciprocal(self, degree=None):
        """ z^degree * self(1/z). """
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise ValueError('reciprocal degree below polynomial degree')
        if not self.rep:
            return self
        return UniPoly(reversed(self.coeffs)).shift(degree - self.degree)

    def scale_arg(self, factor):
        """ self(factor * z). """
        out = []
        power = 1
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return UniPoly(out)

    def map_coefficients(self, func):
        return UniPoly([func(c) for c in self.coeffs])

    def conjugate(self):
        return self.map_coefficients(conj)

    def to_json(self):
        return [to_text(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls([rational(c) for c in data])

    def to_string(self, var='z'):
        if not self.rep:
            return '0'
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                monomial = ''
            elif k == 1:
                monomial = var
            else:
                monomial = '{}^{}'.format(var, k)
            parts.append(_format_coefficient(c, monomial))
        return ' + '.join(parts).replace('+ -', '- ')

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return 'UniPoly({!r})'.format(list(self.coeffs))


Z = UniPoly((0, 1))


def poly_gcd(p, q):
    """
    Monic greatest common divisor over the coefficient field.

    gcd(p, 0) is the monic normalization of p; gcd(0, 0) is the zero polynomial.
    """
    if isinstance(p, SCALAR_TYPES):
        p = UniPoly.constant(p)
    if isinstance(q, SCALAR_TYPES):
        q = UniPoly.constant(q)
    a, b = _common(p.rep, q.rep)
    return UniPoly(a.gcd(b).monic())


def poly_cancel(num, den):
    """
    num/den in lowest terms for a UniPoly or MultiPoly pair, through sympy's
    cancel. The pair is only fixed up to a common scalar factor.
    """
    if not den:
        raise ZeroDivisionError('cancellation with a zero denominator')
    a, b = _common(num.rep, den.rep)
    p, q = a.cancel(b)
    if isinstance(num, UniPoly):
        return UniPoly(p), UniPoly(q)
    return MultiPoly(num.nvars, p), MultiPoly(num.nvars, q)


def _graded_key(exponents):
    return (sum(exponents), exponents)


class MultiPoly(object):
    """
    Polynomial in x0 .. x(n-1) over Q or Q(i), held as a sympy PolyElement.

    `terms` maps exponent tuples to the nonzero coefficients. Leading terms
    are taken in the graded lexicographic order.
    """

    __slots__ = ('rep', '_terms')

    def __init__(self, nvars, terms=None):
        if isinstance(terms, PolyElement):
            if terms.ring.ngens != nvars:
                raise ValueError('{} is not a polynomial in {} variables'.format(terms, nvars))
            rep = _canonical(terms)
        else:
            clean = {}
            for exponents, coeff in (terms or {}).items():
                if len(exponents) != nvars:
                    raise ValueError('exponent {} does not have {} entries'.format(exponents, nvars))
                clean[tuple(exponents)] = coeff
            rep = _from_terms(nvars, clean)
        object.__setattr__(self, 'rep', rep)
        object.__setattr__(self, '_terms', None)

    def __setattr__(self, name, value):
        raise AttributeError('MultiPoly is immutable')

    def __reduce__(self):
        return MultiPoly, (self.nvars, self.terms)

    @classmethod
    def constant(cls, value, nvars):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index, nvars):
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): 1})

    @classmethod
    def variables(cls, nvars):
        return tuple(cls.variable(i, nvars) for i in range(nvars))

    @property
    def nvars(self):
        return self.rep.ring.ngens

    @property
    def terms(self):
        if self._terms is None:
            object.__setattr__(self, '_terms', {e: from_ground(c) for e, c in self.rep.items()})
        return self._terms

    def coefficients(self):
        return list(self.terms.values())

    def is_zero(self):
        return not self.rep

    def __bool__(self):
        return bool(self.rep)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError('mixing polynomials in {} and {} variables'.format(self.nvars, other.nvars))
            return other
        if isinstance(other, SCALAR_TYPES):
            return MultiPoly.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = _common(self.rep, other.rep)
        return MultiPoly(self.nvars, a + b)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, -self.rep)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = _common(self.rep, other.rep)
        return MultiPoly(self.nvars, a - b)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = _common(self.rep, other.rep)
        return MultiPoly(self.nvars, a * b)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return MultiPoly(self.nvars, self.rep ** exponent)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.rep.ring == other.rep.ring and self.rep == other.rep

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def leading_term(self):
        exponents = max(self.terms, key=_graded_key)
        return exponents, self.terms[exponents]

    def total_degree(self):
        return max((sum(e) for e in self.rep), default=-1)

    def degree_in(self, index):
        return max((e[index] for e in self.rep), default=-1)

    def divide_exact(self, divisor):
        """ Quotient q with self = q * divisor, or NotDivisible. """
        divisor = self._lift(divisor)
        if not divisor:
            raise ZeroDivisionError('multivariate division by zero')
        a, b = _common(self.rep, divisor.rep)
        try:
            return MultiPoly(self.nvars, a.exquo(b))
        except ExactQuotientFailed:
            raise NotDivisible('{} does not divide {}'.format(divisor.to_string(), self.to_string()))

    def derivative(self, index):
        return MultiPoly(self.nvars, self.rep.diff(index))

    def permute(self, order):
        """ Rename variables: variable order[i] of the result is variable i of self. """
        terms = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, k in enumerate(order):
                new[k] = e[i]
            terms[tuple(new)] = c
        return MultiPoly(self.nvars, terms)

    def evaluate(self, values):
        """ Substitute values (scalars, UniPoly, RatFun, MultiPoly ...) for the variables. """
        if len(values) != self.nvars:
            raise ValueError('expected {} values'.format(self.nvars))
        powers = [{} for _ in range(self.nvars)]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = values[i] ** k
            return cache[k]

        result = 0
        for e, c in sorted(self.terms.items(), key=lambda item: _graded_key(item[0])):
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def clear_denominators(self, nums, dens):
        """
        Substitute x_i = nums[i]/dens[i] (UniPoly pairs) and multiply by
        prod dens[i]^deg_i, where deg_i is the degree of self in x_i.
        The result is a UniPoly that vanishes iff the substituted value does.
        """
        degrees = [self.degree_in(i) for i in range(self.nvars)]
        cache = {}

        def power(poly_list, i, k, tag):
            key = (tag, i, k)
            if key not in cache:
                cache[key] = poly_list[i] ** k
            return cache[key]

        result = UniPoly()
        for e, c in self.terms.items():
            term = UniPoly.constant(c)
            for i, k in enumerate(e):
                term = term * power(nums, i, k, 'n') * power(dens, i, degrees[i] - k, 'd')
            result = result + term
        return result

    def to_string(self, names=None):
        if names is None:
            names = ['x{}'.format(i) for i in range(self.nvars)]
        if not self.rep:
            return '0'
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda item: _graded_key(item[0]), reverse=True):
            monomial = '*'.join(n if k == 1 else '{}^{}'.format(n, k) for n, k in zip(names, e) if k)
            parts.append(_format_coefficient(c, monomial))
        return ' + '.join(parts).replace('+ -', '- ')

    def __repr__(self):
        return 'MultiPoly({}, {!r})'.format(self.nvars, self.terms)


def bipoly_divide_exact(f, g):
    return f.divide_exact(g)


def _check_digits(digits):
    if digits < 10:
        raise PrecisionUnreachable('at least 10 digits are required, got {}'.format(digits))
    if digits > DIGITS_CAP:
        raise PrecisionUnreachable('{} digits exceeds the configured cap of {}'.format(digits, DIGITS_CAP))


def agm_pi(digits):
    """ Gauss-Legendre (AGM) iteration for pi, used as an oracle for mpmath.pi. """
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        a = mpmath.mpf(1)
        b = 1 / mpmath.sqrt(2)
        t = mpmath.mpf(1) / 4
        p = mpmath.mpf(1)
        eps = mpmath.mpf(10) ** (-(digits + GUARD_DIGITS))
        while abs(a - b) > eps:
            a_next = (a + b) / 2
            b = mpmath.sqrt(a * b)
            t -= p * (a - a_next) ** 2
            a = a_next
            p *= 2
        return (a + b) ** 2 / (4 * t)


def bigfloat_constants(digits):
    """
    Return pi, Gamma(1/4), Gamma(3/4) and the period K1 as mpmath numbers,
    computed with GUARD_DIGITS extra digits.

    Gamma(1/4) = (2 pi)^(3/4) / sqrt(AGM(sqrt 2, 1)); Gamma(3/4) then follows
    from the reflection Gamma(1/4) Gamma(3/4) = pi sqrt 2.
    """
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        pi = +mpmath.pi
        gamma_1_4 = (2 * pi) ** (mpmath.mpf(3) / 4) / mpmath.sqrt(mpmath.agm(mpmath.sqrt(2), 1))
        gamma_3_4 = pi * mpmath.sqrt(2) / gamma_1_4
        k1 = pi ** (mpmath.mpf(3) / 2) / 2 ** (mpmath.mpf(3) / 2) / gamma_3_4 ** 2
        logger.debug('constants at %d digits: Gamma(3/4)=%s', digits, mpmath.nstr(gamma_3_4, 20))
        return {'pi': pi, 'gamma_1_4': gamma_1_4, 'gamma_3_4': gamma_3_4, 'K1': k1}


def to_mp(value):
    """ Exact scalar to mpmath number at the current working precision. """
    if isinstance(value, GaussianRational):
        return mpmath.mpc(to_mp(value.re), to_mp(value.im))
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / value.denominator
