# The conjugation P, Q, F of the main flow and the nonlinear equations of P
#
# Q = z 2F1([1/2, 1/4], [5/4]; z)^4 linearises every flow member,
# R_a1(P(z)) = P(a1 z) with P the compositional inverse of Q, and the
# generator F satisfies z P' = F(P). P = sn(z^(1/4), i)^4 is not holonomic;
# the equations below are all checked on its series.

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from rg_isogeny.algebra.diffop import omega_q_printed, op_apply_series
from rg_isogeny.algebra.exactnum import GaussianRational, MultiPoly, UniPoly, exact_div, to_mp
from rg_isogeny.algebra.hypergeom import F21Params, f21_series, series_value
from rg_isogeny.algebra.ratfun import RatFun, rf_series
from rg_isogeny.algebra.series import TruncatedSeries
from rg_isogeny.checks.rotabaxter import (flow_solve, infinitesimal_generator, inverse_branch, main_family_map,
                                          preset, r_minus4)
from rg_isogeny.constants import D_81, ETA_HALF_PRINTED, F_ARCTANH_PRINTED, GUARD_DIGITS, P_PRINTED, Q_PRINTED
from rg_isogeny.errors import InsufficientOrder, NonSolvableOrder
from rg_isogeny.report import Check, outcome, reported

logger = logging.getLogger(__name__)

H_PARAMS = F21Params(Fraction(1, 2), Fraction(1, 4), Fraction(5, 4))

MIN_TRIPLE_ORDER = 8

# order reached by the direct recurrence for P
ODE_ORDER = 200

GROUP_LAW_ORDER = 24

# the nonlinear equations of P are checked to at least this order
NONLINEAR_ORDER = 60


@dataclass(frozen=True)
class ConjugacyTriple:
    q: TruncatedSeries
    p: TruncatedSeries
    f: TruncatedSeries
    order: int

    def inconsistencies(self):
        """ Names of the failing relations among Q(P) = P(Q) = z, z P' = F(P) and Q' F = Q """
        z = TruncatedSeries.variable(self.order)
        bad = []
        if not (self.q(self.p).agrees_with(z) and self.p(self.q).agrees_with(z)):
            bad.append('Q(P) = P(Q) = z')
        if not self.p.derive().shift(1).agrees_with(self.f(self.p)):
            bad.append("z P' = F(P)")
        if not (self.q.derive() * self.f).agrees_with(self.q):
            bad.append("Q' F = Q")
        return bad


@lru_cache(maxsize=8)
def build_triple(order):
    if order < MIN_TRIPLE_ORDER:
        raise InsufficientOrder('the conjugation triple needs order >= {}, got {}'.format(MIN_TRIPLE_ORDER, order))
    q = (f21_series(H_PARAMS, order) ** 4).shift(1).truncate(order)
    p = q.reverse()
    f = infinitesimal_generator(preset('main'), order)
    logger.debug('conjugation triple built to order %d', order)
    return ConjugacyTriple(q, p, f, order)


def alternative_q(order):
    """ z/(1-z) 2F1([1/4, 3/4], [5/4]; -z/(1-z))^4 """
    w = rf_series(RatFun(UniPoly([0, -1]), UniPoly([1, -1])), order)
    g = f21_series(F21Params(Fraction(1, 4), Fraction(3, 4), Fraction(5, 4)), order)
    return -(w * g(w) ** 4)


def generator_closed_form(params, order):
    """ z (1-z) 2F1(params; z) """
    return (f21_series(params, order) * TruncatedSeries.from_poly(UniPoly([1, -1]), order)).shift(1)


# conjugacy

def flow_conjugacy_check(a1, order):
    """ P(a1 z) = R_a1(P(z)) """
    p = build_triple(order).p
    flow = flow_solve(preset('main'), a1, order).series
    return p.scale(a1).agrees_with(flow(p))


def s_branch_check(order):
    """ S(P(z)) = P(-z/4) with S the branch of the inverse of R_-4 vanishing at 0 """
    p = build_triple(order).p
    return inverse_branch(r_minus4(), order)(p).agrees_with(p.scale(Fraction(-1, 4)))


def group_law_check(a1, b1, order=GROUP_LAW_ORDER):
    """ P(a1 b1 z) = R_a1(R_b1(P(z))) """
    system = preset('main')
    p = build_triple(max(order, MIN_TRIPLE_ORDER)).p.truncate(order)
    ra = flow_solve(system, a1, order).series
    rb = flow_solve(system, b1, order).series
    return p.scale(a1 * b1).agrees_with(ra(rb(p)))


def minus_four_relation(order):
    """
    P(-4z) against R_-4(P) = -4P/(1-P)^2 and against the denominator 1 - P^2.
    Returns (corrected form holds, first index where the second form differs).
    """
    p = build_triple(order).p
    target = p.scale(-4)
    corrected = rf_series(r_minus4(), order)(p)
    other = (p * -4) / (1 - p * p)
    return target.agrees_with(corrected), target.first_difference(other)


def generator_identities(order):
    """ (label, ok) pairs for the relations between P, Q, F and H = 2F1([1/2, 1/4], [5/4]) """
    t = build_triple(order)
    z = TruncatedSeries.variable(order)
    h = f21_series(H_PARAMS, order)
    sqrt_inv = TruncatedSeries.from_poly(UniPoly([1, -1]), order).pow_frac(Fraction(-1, 2))
    q_r81 = t.q(rf_series(main_family_map(D_81), order))
    return [
        ("z P' = F(P)", t.p.derive().shift(1).agrees_with(t.f(t.p))),
        ("Q' F = Q", (t.q.derive() * t.f).agrees_with(t.q)),
        ('Q(R_-4) = -4 Q', t.q(rf_series(r_minus4(), order)).agrees_with(t.q * -4)),
        ('Q(R_81) = 81 Q', q_r81.agrees_with(t.q * 81)),
        ('P H(P)^4 = z', (t.p * h(t.p) ** 4).agrees_with(z)),
        ("4z H' + H = (1-z)^(-1/2)", (h.derive().shift(1) * 4 + h).agrees_with(sqrt_inv)),
        ('Omega_Q Q = 0', op_apply_series(omega_q_printed(), t.q).is_zero()),
        ('second form of Q', alternative_q(order).agrees_with(t.q)),
    ]


# nonlinear equations of P

def order_one_residual(p, lam4=1):
    """ z^3 P'^4 - lam^4 (1-P)^2 P^3 """
    d1 = p.derive()
    return (d1 ** 4).shift(3) - (1 - p) ** 2 * p ** 3 * lam4


def painleve_residual(p, eta=Fraction(3, 4)):
    """
    P'' - (3/(4P) + 1/(2(P-1))) P'^2 + (eta/z) P' multiplied by 4z P(P-1):

        4z P(P-1) P'' - z (5P-3) P'^2 + 4 eta P(P-1) P'
    """
    d1 = p.derive()
    d2 = d1.derive()
    u = p * (p - 1)
    return (u * d2 * 4).shift(1) - ((5 * p - 3) * d1 * d1).shift(1) + u * d1 * (4 * eta)


def third_order_residual(p):
    d1 = p.derive()
    d2 = d1.derive()
    d3 = d2.derive()
    u = p * (p - 1)
    v = 5 * p - 3
    return (((5 * p - 6) * p + 3) * d1 ** 4).shift(1) - u * v * d1 ** 3 - (u * v * d2 * d1 * d1).shift(1) \
        + u * u * (d2 + d3.shift(1)) * d1 * 4 - (u * u * d2 * d2 * 4).shift(1)


def sinus_residuals(p):
    """
    The two equations inherited from S'' + 2S^3 = 0, with u = P/z:

        P'^2 - (1-P) u^(3/2)
        P P'' - (3/4) P'^2 + (3/4) u P' + (1/2) z u^(5/2)
    """
    d1 = p.derive()
    u = p.shift(-1)
    first = d1 * d1 - (1 - p) * u.pow_frac(Fraction(3, 2))
    second = p * d1.derive() - d1 * d1 * Fraction(3, 4) + u * d1 * Fraction(3, 4) \
        + u.pow_frac(Fraction(5, 2)).shift(1) * Fraction(1, 2)
    return first, second


def inverted(e, weight):
    """ p^weight e(z, 1/p, -q/p^2) for e in (z, p, q) """
    terms = {}
    for (a, b, c), coeff in e.terms.items():
        power = weight - b - 2 * c
        if power < 0:
            raise ValueError('weight {} is too small to clear p^-{}'.format(weight, b + 2 * c))
        key = (a, power, c)
        terms[key] = terms.get(key, 0) + (-1) ** c * coeff
    return MultiPoly(3, terms)


def order_one_inversion_symmetry():
    """ E = z^3 q^4 - (1-p)^2 p^3 satisfies p^8 E(z, 1/p, -q/p^2) = E """
    z, p, q = MultiPoly.variables(3)
    e = z ** 3 * q ** 4 - (1 - p) ** 2 * p ** 3
    return inverted(e, 8) == e


def q_nonlinear_residual(q):
    """ -4z^2(1-z)^2 (QQ'Q''' + Q'^2 Q'' - 2QQ''^2) + z(3-5z)(1-z) Q'(QQ'' - Q'^2) + (5z^2-6z+3) QQ'^2 """
    order = q.order

    def poly(*coeffs):
        return TruncatedSeries.from_poly(UniPoly(coeffs), order)

    d1 = q.derive()
    d2 = d1.derive()
    d3 = d2.derive()
    return poly(0, 0, -4, 8, -4) * (q * d1 * d3 + d1 * d1 * d2 - q * d2 * d2 * 2) \
        + poly(0, 3, -8, 5) * d1 * (q * d2 - d1 * d1) + poly(3, -6, 5) * q * d1 * d1


def nonlinear_residuals(order):
    p = build_triple(order).p
    first, second = sinus_residuals(p)
    return [
        ("z^3 P'^4 = (1-P)^2 P^3", order_one_residual(p).is_zero()),
        ('second-order equation', painleve_residual(p).is_zero()),
        ('third-order equation', third_order_residual(p).is_zero()),
        ('first sinus equation', first.is_zero()),
        ('second sinus equation', second.is_zero()),
        ('P -> 1/P symmetry', order_one_inversion_symmetry()),
    ]


def p_series_from_ode(order):
    """
    P from 4z P(P-1) P'' - z (5P-3) P'^2 + 3 P(P-1) P' = 0, P = z + ...

    The z^n coefficient is -(4n-3)(n-1) p_n plus terms in p_1 .. p_(n-1); the
    convolutions U = P(P-1) and W = P'^2 grow by one index per step.
    """
    p = [Fraction(0), Fraction(1)]
    u = [Fraction(0), Fraction(-1)]
    w = [Fraction(1)]

    def d1(k):
        return (k + 1) * p[k + 1] if k + 1 < len(p) else 0

    def d2(k):
        return (k + 2) * (k + 1) * p[k + 2] if k + 2 < len(p) else 0

    for n in range(2, order):
        p.append(Fraction(0))
        u_top = sum(p[i] * p[n - i] for i in range(1, n))
        w_top = sum(d1(i) * d1(n - 1 - i) for i in range(1, n - 1))
        uu = u + [u_top]
        ww = w + [w_top]
        acc = 4 * sum(uu[i] * d2(n - 1 - i) for i in range(1, n))
        acc -= sum((5 * p[i] - (3 if i == 0 else 0)) * ww[n - 1 - i] for i in range(n))
        acc += 3 * sum(uu[i] * d1(n - i) for i in range(1, n + 1))
        p[n] = Fraction(acc) / ((4 * n - 3) * (n - 1))
        u.append(u_top - p[n])
        w.append(w_top + 2 * n * p[n])
    return TruncatedSeries(p[:order], 0, order)


def deform_relation(order):
    """ z P' = P (1-P)^(1/2) H(P) """
    p = build_triple(order).p
    h = f21_series(H_PARAMS, order)
    return p.derive().shift(1).agrees_with(p * (1 - p).pow_frac(Fraction(1, 2)) * h(p))


# the eta family

@dataclass(frozen=True)
class PainleveSolution:
    eta: Fraction
    series: TruncatedSeries
    mu: object = 0
    lam: object = 1

    def residual(self):
        return painleve_residual(self.series, self.eta)


def solve_by_probing(residual, initial, order):
    """
    Coefficients after `initial` solved one at a time, the z^n coefficient of
    the residual being affine in the unknown c_n. Raises NonSolvableOrder
    when c_n drops out or the initial data is inconsistent.
    """
    coeffs = [Fraction(c) for c in initial]
    start = len(coeffs)
    head = residual(TruncatedSeries(coeffs, 0, start + 2))
    bad = head.first_difference(TruncatedSeries.zero(start), start)
    if bad is not None:
        raise NonSolvableOrder(bad)
    for n in range(start, order):
        r0 = residual(TruncatedSeries(coeffs + [0], 0, n + 3))[n]
        r1 = residual(TruncatedSeries(coeffs + [1], 0, n + 3))[n]
        if r1 == r0:
            raise NonSolvableOrder(n)
        coeffs.append(exact_div(-r0, r1 - r0))
    return TruncatedSeries(coeffs, 0, order)


def painleve_eta(eta, order, initial=(1, 1)):
    """ The solution of the eta equation with the given first coefficients """
    eta = Fraction(eta)
    series = solve_by_probing(lambda s: painleve_residual(s, eta), initial, order)
    return PainleveSolution(eta, series)


def p_substitution_solves(eta, order):
    """ P(z^(4(1-eta))) solves the eta equation, 4(1-eta) a positive integer """
    alpha = 4 * (1 - Fraction(eta))
    if alpha.denominator != 1 or alpha < 1:
        raise ValueError('4(1 - eta) = {} is not a positive integer'.format(alpha))
    alpha = int(alpha)
    p = build_triple(max(order // alpha + 1, MIN_TRIPLE_ORDER)).p
    return painleve_residual(p.substitute_power(alpha).truncate(order), eta).is_zero()


def eta_shift_law(alpha, eta, series, order):
    """ y(z^alpha) solves the 1 + alpha(eta - 1) equation when y solves the eta equation """
    shifted = 1 + alpha * (Fraction(eta) - 1)
    return painleve_residual(series.substitute_power(alpha).truncate(order), shifted).is_zero()


# the Jacobi elliptic sinus

@dataclass(frozen=True)
class SnSeries:
    series: TruncatedSeries

    def residual(self):
        s = self.series
        return s.derive().derive() + s ** 3 * 2


def sn_series(order):
    """ S'' + 2S^3 = 0, S(0) = 0, S'(0) = 1 """
    s = [Fraction(0)] * order
    if order > 1:
        s[1] = Fraction(1)
    sq = []
    cube = []
    for n in range(order - 2):
        sq.append(sum(s[i] * s[n - i] for i in range(n + 1)))
        cube.append(sum(sq[i] * s[n - i] for i in range(n + 1)))
        s[n + 2] = -2 * cube[n] / ((n + 2) * (n + 1))
    return SnSeries(TruncatedSeries(s, 0, order))


def sn_closed_form(order):
    """ (label, ok) pairs: P(u^4) = S(u)^4 and the Taylor series of EllipticF(u, i) """
    if order % 4:
        raise ValueError('order must be a multiple of 4, got {}'.format(order))
    sn = sn_series(order + 1)
    quarter = order // 4 + 1
    p = p_series_from_ode(quarter)
    lhs = f21_series(F21Params(Fraction(1, 4), Fraction(1, 2), Fraction(5, 4)), quarter).substitute_power(4).shift(1)
    taylor = [0] * (order + 1)
    for n in range(order // 4 + 1):
        if 4 * n + 1 <= order:
            taylor[4 * n + 1] = Fraction(comb(2 * n, n), 4 ** n * (4 * n + 1))
    elliptic_f = TruncatedSeries(taylor, 0, order + 1)
    return [
        ("S'' + 2S^3 = 0", sn.residual().is_zero()),
        ('S reverts to EllipticF', sn.series.reverse().agrees_with(elliptic_f)),
        ('P(u^4) = S(u)^4', p.substitute_power(4).agrees_with(sn.series ** 4, order + 1)),
        ('EllipticF Taylor series', lhs.agrees_with(elliptic_f, order + 1)),
    ]


def _sn4(u):
    return mpmath.ellipfun('sn', u, -1) ** 4


def puiseux_numeric_check(digits, mu=Fraction(1, 2), lam=1, point=Fraction(1, 10)):
    """
    Y(z) = sn(mu + lam z^(1/4) | m = -1)^4 against the second-order equation
    and z^3 Y'^4 = lam^4 (1-Y)^2 Y^3 at `point`, with numerical derivatives.
    Returns the two absolute residuals and the tolerance.
    """
    with mpmath.workdps(digits + GUARD_DIGITS):
        mu, lam, z = to_mp(mu), to_mp(lam), to_mp(point)

        def y(x):
            return _sn4(mu + lam * mpmath.root(x, 4))

        y0 = y(z)
        y1 = mpmath.diff(y, z)
        y2 = mpmath.diff(y, z, 2)
        second = y2 - (3 / (4 * y0) + 1 / (2 * (y0 - 1))) * y1 ** 2 + 3 * y1 / (4 * z)
        first = z ** 3 * y1 ** 4 - lam ** 4 * (1 - y0) ** 2 * y0 ** 3
        tolerance = mpmath.mpf(10) ** (5 - digits)
        logger.debug('puiseux residuals at mu=%s: %s, %s', mu, mpmath.nstr(abs(second), 5), mpmath.nstr(abs(first), 5))
        return abs(second), abs(first), tolerance


def closed_form_numeric_check(digits, point=Fraction(1, 2)):
    """ sn(z^(1/4) | m = -1)^4 against the partial sum of the series of P """
    p = p_series_from_ode(digits + 20)
    with mpmath.workdps(digits + GUARD_DIGITS):
        z = to_mp(point)
        diff = abs(_sn4(mpmath.root(z, 4)) - series_value(p, z))
        return diff < mpmath.mpf(10) ** (-digits)


def arctanh_generator(order):
    """ The arctanh generator against z(1-z) 2F1([1, 1/2], [3/2]; z) and its printed terms """
    f = infinitesimal_generator(preset('arctanh'), order)
    closed = generator_closed_form(F21Params(1, Fraction(1, 2), Fraction(3, 2)), order)
    return f.coefficients(0, len(F_ARCTANH_PRINTED)) == F_ARCTANH_PRINTED and f.agrees_with(closed)


# suite

def _labelled(results):
    failed = [label for label, ok in results if not ok]
    return outcome(not failed, {'failed': failed} if failed else None)


def _check_triple(config):
    t = build_triple(config.order)
    bad = t.inconsistencies()
    if t.q.coefficients(0, len(Q_PRINTED)) != Q_PRINTED:
        bad.append('Q coefficients')
    if t.p.coefficients(0, len(P_PRINTED)) != P_PRINTED:
        bad.append('P coefficients')
    return outcome(not bad, {'failed': bad} if bad else None)


def _check_conjugacy(config):
    order = config.order
    results = [('a1 = {}'.format(a1), flow_conjugacy_check(a1, order))
               for a1 in (-4, 1, 81, Fraction(2, 3))]
    results.append(('a1 = -7-24i', flow_conjugacy_check(GaussianRational(-7, -24), order)))
    results.append(('inverse branch of R_-4', s_branch_check(order)))
    return _labelled(results)


def _check_minus_four(config):
    corrected, index = minus_four_relation(config.order)
    if not corrected:
        return outcome(False, 'P(-4z) differs from R_-4(P(z))')
    if index is not None:
        return reported({'printed denominator': '1 - P^2', 'holds with': '(1 - P)^2', 'first difference': index})
    return outcome(True)


def _check_group_law(config):
    rng = random.Random(config.order)
    pairs = [(Fraction(rng.choice([-7, -5, -3, -2, 2, 3, 5, 7]), rng.randint(1, 5)),
              Fraction(rng.choice([-7, -5, -3, -2, 2, 3, 5, 7]), rng.randint(1, 5))) for _ in range(4)]
    failed = [str(pair) for pair in pairs if not group_law_check(pair[0], pair[1], min(config.order, GROUP_LAW_ORDER))]
    return outcome(not failed, {'pairs': failed} if failed else None)


def _check_generators(config):
    return _labelled(generator_identities(config.order))


def _check_nonlinear(config):
    order = max(config.order, NONLINEAR_ORDER)
    results = nonlinear_residuals(order)
    results.append(('Q equation', q_nonlinear_residual(build_triple(order).q).is_zero()))
    results.append(('deformed elliptic relation', deform_relation(order)))
    return _labelled(results)


def _check_p_from_ode(config):
    p = p_series_from_ode(ODE_ORDER)
    return outcome(p.agrees_with(build_triple(config.order).p) and painleve_residual(p).is_zero())


def _check_eta(config):
    half = painleve_eta(Fraction(1, 2), len(ETA_HALF_PRINTED))
    results = [('eta = 1/2 analytic solution', half.series.coefficients() == ETA_HALF_PRINTED)]
    for eta in (0, Fraction(1, 2), Fraction(3, 4)):
        results.append(('P(z^(4(1-eta))) at eta = {}'.format(eta), p_substitution_solves(eta, config.order)))
    p = build_triple(config.order).p
    results.append(('eta 3/4 -> 1/2 under z -> z^2', eta_shift_law(2, Fraction(3, 4), p, config.order)))
    solved = painleve_eta(Fraction(3, 4), config.order, (0, 1)).series
    results.append(('eta 3/4 equation is solved by P', solved.agrees_with(p)))
    return _labelled(results)


def _check_sn(config):
    return _labelled(sn_closed_form(config.order - config.order % 4))


def _check_numeric(config):
    second, first, tolerance = puiseux_numeric_check(config.digits)
    ok = second < tolerance and first < tolerance and closed_form_numeric_check(config.digits)
    return outcome(ok, None if ok else {'second-order': mpmath.nstr(second, 5), 'first-order': mpmath.nstr(first, 5)})


CHECKS = [
    Check('conjugation.triple', 'Q', _check_triple),
    Check('conjugation.flow-conjugacy', 'eqfuncPa', _check_conjugacy),
    Check('conjugation.minus-four', 'eqfuncP', _check_minus_four),
    Check('conjugation.group-law', 'eqfuncPa', _check_group_law),
    Check('conjugation.generators', 'covP', _check_generators),
    Check('conjugation.nonlinear', 'third', _check_nonlinear),
    Check('conjugation.p-recurrence', 'ClosetoPainlV', _check_p_from_ode),
    Check('conjugation.eta', 'ClosetoPainlVbis', _check_eta),
    Check('conjugation.sn', 'CLOSED', _check_sn),
    Check('conjugation.puiseux', 'Puiseuxscaled', _check_numeric),
]
