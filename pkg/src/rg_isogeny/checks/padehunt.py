# Pade approximation, rational reconstruction of flow members and the
# singularities of P
#
# Approximants are solved exactly over the coefficient field; only the roots
# of their denominators are computed numerically, with mpmath.

import logging
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from rg_isogeny.algebra.exactnum import GaussianRational, UniPoly, bigfloat_constants, exact_div, to_mp
from rg_isogeny.algebra.hypergeom import zs_value
from rg_isogeny.algebra.ratfun import RatFun, rf_series
from rg_isogeny.checks.catalog import entry
from rg_isogeny.checks.conjugation import p_series_from_ode
from rg_isogeny.checks.rotabaxter import (delta_solve, flow_solve, inverse_branch, iterate, mad_check, preset,
                                          r_minus4)
from rg_isogeny.constants import GUARD_DIGITS, SINGULARITIES_IN_ZS, ZS_PRINTED
from rg_isogeny.errors import InsufficientOrder, PrecisionUnreachable
from rg_isogeny.report import Check, outcome, reported

logger = logging.getLogger(__name__)

# denominator degrees of the windows compared by singularity_scan
SCAN_WINDOWS = (12, 16, 20)
SCAN_MIN_ORDER = 80

# relative movement allowed across windows, and the radius of a root cluster
STABILITY = 1e-3

LATTICE_TOLERANCE = 1e-3

POLE = 'pole'
ZERO = 'zero'


@dataclass(frozen=True)
class PadeApproximant:
    m: int
    n: int
    value: RatFun
    defect: int


@dataclass(frozen=True)
class LatticePoint:
    m1: int
    m2: int
    x: int
    y: int
    kind: str

    @property
    def location(self):
        """ The point in units of z_s """
        return GaussianRational(self.x, self.y)


@dataclass(frozen=True)
class SingularityEstimate:
    location: object
    modulus: object
    multiplicity: int
    spread: float
    lattice: LatticePoint = None


# exact linear algebra

def _reduce(rows, ncols):
    """ Gauss-Jordan elimination in place; returns the pivot columns. """
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [exact_div(v, lead) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def _denominator(c, m, n):
    """ q with q_0 = 1 and (q f)_k = 0 for m < k <= m+n, or the rank of the system when it is singular """

    def coeff(i):
        return c[i] if 0 <= i < len(c) else 0

    rows = [[coeff(m + k - j) for j in range(1, n + 1)] + [-coeff(m + k)] for k in range(1, n + 1)]
    pivots = _reduce(rows, n)
    if len(pivots) < n:
        return None, len(pivots)
    return [1] + [rows[i][n] for i in range(n)], n


def pade(f, m, n):
    """
    The (m, n) Pade approximant of f, solved exactly. A singular system
    lowers both degrees by the rank deficiency, which is recorded as the
    defect.
    """
    if f.order < m + n + 1:
        raise InsufficientOrder('a ({}, {}) Pade approximant needs {} coefficients, the series has {}'.format(
            m, n, m + n + 1, f.order))
    if f.valuation < 0:
        raise ValueError('series has a pole at 0')
    c = f.coefficients(0, m + n + 1)
    defect = 0
    while True:
        if m < 0:
            return PadeApproximant(m + defect, n + defect, RatFun(0), defect)
        q, rank = _denominator(c, m, n)
        if q is not None:
            break
        drop = n - rank
        m, n, defect = m - drop, n - drop, defect + drop
    p = [sum(q[j] * c[i - j] for j in range(min(i, n) + 1)) for i in range(m + 1)]
    logger.debug('pade (%d, %d) solved with defect %d', m, n, defect)
    return PadeApproximant(m + defect, n + defect, RatFun(UniPoly(p), UniPoly(q)), defect)


def rational_reconstruct(f, maxdeg):
    """ The first (d, d) approximant, d <= maxdeg, whose series equals f to its full order """
    for d in range(1, maxdeg + 1):
        if f.order < 2 * d + 1:
            break
        candidate = pade(f, d, d).value
        if rf_series(candidate, f.order).agrees_with(f):
            return candidate
    return None


def rational_hunt(system, a1, maxdeg, order):
    """
    A rational flow member R_a1 of degree at most maxdeg, or None. Candidates
    come from Pade approximants of the flow series and are accepted only when
    the covariance residual vanishes exactly.
    """
    if order < 2 * maxdeg + 8:
        raise InsufficientOrder('hunting to degree {} needs order >= {}, got {}'.format(
            maxdeg, 2 * maxdeg + 8, order))
    flow = flow_solve(system, a1, order).series
    for d in range(1, maxdeg + 1):
        candidate = pade(flow, d, d).value
        if not rf_series(candidate, order).agrees_with(flow):
            continue
        if mad_check(system.a, candidate):
            logger.info('a1 = %s: rational flow member of degree %d', a1, candidate.degree)
            return candidate
        logger.warning('a1 = %s: degree %d candidate matches the series but not the covariance', a1, d)
    logger.info('a1 = %s: no rational flow member up to degree %d', a1, maxdeg)
    return None


def delta_not_rational(maxdeg=12):
    """ No (d, d) approximant of Delta, d <= maxdeg, reproduces its series """
    return rational_reconstruct(delta_solve(2 * maxdeg + 8), maxdeg) is None


# numeric roots

def _roots(poly):
    if poly.degree < 1:
        return []
    coeffs = [to_mp(c) for c in reversed(poly.coefficients())]
    try:
        return mpmath.polyroots(coeffs, maxsteps=50 * len(coeffs), extraprec=2 * mpmath.mp.dps)
    except mpmath.mp.NoConvergence:
        logger.warning('root finding did not converge for a degree %d denominator', poly.degree)
        return []


def _clusters(roots):
    """ (centroid, size) of roots grouped within STABILITY relative distance """
    groups = []
    for root in sorted(roots, key=abs):
        for group in groups:
            if abs(root - group[0]) <= STABILITY * abs(group[0]):
                group.append(root)
                break
        else:
            groups.append([root])
    return [(sum(g) / len(g), len(g)) for g in groups]


def singularity_scan(f, digits, unit=None):
    """
    Poles of f estimated from the denominators of Pade approximants in the
    SCAN_WINDOWS windows. A cluster is kept only when every window has one
    within STABILITY relative distance. With `unit` (z_s) each estimate is
    matched against the pole lattice.
    """
    if f.order < SCAN_MIN_ORDER:
        raise InsufficientOrder('singularity scan needs order >= {}, got {}'.format(SCAN_MIN_ORDER, f.order))
    with mpmath.workdps(digits + GUARD_DIGITS):
        windows = []
        for n in SCAN_WINDOWS:
            approx = pade(f, f.order - 1 - n, n)
            windows.append(_clusters(_roots(approx.value.den)))
            logger.debug('window n=%d: %d clusters', n, len(windows[-1]))
        estimates = []
        for centroid, size in windows[-1]:
            spread = 0
            for other in windows[:-1]:
                near = [abs(c - centroid) / abs(centroid) for c, _ in other]
                if not near or min(near) > STABILITY:
                    break
                spread = max(spread, min(near))
            else:
                point = match_lattice(centroid / unit) if unit is not None else None
                estimates.append(SingularityEstimate(centroid, abs(centroid), size, float(spread), point))
        return sorted(estimates, key=lambda e: e.modulus)


def radius_estimate(f, digits, n=SCAN_WINDOWS[0]):
    """ Smallest modulus among the denominator roots of the (order-1-n, n) approximant """
    with mpmath.workdps(digits + GUARD_DIGITS):
        roots = _roots(pade(f, f.order - 1 - n, n).value.den)
        if not roots:
            return mpmath.inf
        return min(abs(r) for r in roots)


def zs_constant(digits):
    """
    z_s = -(1/16) pi^6 / Gamma(3/4)^8 = -4 2F1([1/4, 1/2], [5/4]; 1)^4 = -4 K1^4,
    the first two required to agree to digits - 5.
    """
    constants = bigfloat_constants(digits)
    hypergeometric = zs_value(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        gamma_form = -constants['pi'] ** 6 / (16 * constants['gamma_3_4'] ** 8)
        period_form = -4 * constants['K1'] ** 4
        tolerance = abs(gamma_form) * mpmath.mpf(10) ** (5 - digits)
        if abs(gamma_form - hypergeometric) > tolerance or abs(gamma_form - period_form) > tolerance:
            raise PrecisionUnreachable('z_s routes disagree: {} vs {}'.format(
                mpmath.nstr(gamma_form, 20), mpmath.nstr(hypergeometric, 20)))
        return +gamma_form


# the lattice of poles and zeros

def lattice_predict(m1, m2):
    if m1 == 0 and m2 == 0:
        raise ValueError('(m1, m2) = (0, 0) is not a lattice point')
    x = (m1 * m1 - 2 * m1 * m2 - m2 * m2) * (m1 * m1 + 2 * m1 * m2 - m2 * m2)
    y = 4 * m1 * m2 * (m2 - m1) * (m2 + m1)
    return LatticePoint(m1, m2, x, y, POLE if (m1 + m2) % 2 else ZERO)


def curve_value(x, y, big_m):
    return (2 ** 12 * big_m ** 4 - 2 ** 11 * x * big_m ** 3 - 2 ** 7 * (17 * y * y + 14 * x * x) * big_m ** 2
            - 2 ** 5 * x * (8 * x * x + 7 * y * y) * big_m + y ** 4)


def lattice_curve_member(pt, m):
    """ (x, y) lies on the genus-zero curve indexed by M = m^4 """
    return curve_value(pt.x, pt.y, m ** 4) == 0


def lattice_search(x, y, bound):
    """ A lattice point with the given coordinates and |m1|, |m2| <= bound, or None """
    for m1 in range(-bound, bound + 1):
        for m2 in range(-bound, bound + 1):
            if (m1, m2) != (0, 0):
                pt = lattice_predict(m1, m2)
                if (pt.x, pt.y) == (x, y):
                    return pt
    return None


def match_lattice(w, kind=POLE):
    """ The lattice point of the given kind nearest to w (in z_s units) within LATTICE_TOLERANCE """
    bound = int(mpmath.ceil(mpmath.root(abs(w), 4))) + 1
    best = None
    for m1 in range(-bound, bound + 1):
        for m2 in range(-bound, bound + 1):
            if (m1, m2) == (0, 0):
                continue
            pt = lattice_predict(m1, m2)
            if pt.kind != kind:
                continue
            distance = abs(w - mpmath.mpc(pt.x, pt.y))
            if best is None or distance < best[0]:
                best = (distance, pt)
    if best is not None and best[0] <= LATTICE_TOLERANCE * abs(w):
        return best[1]
    return None


def pole_zero_lattice(n1, n2):
    """
    Pole and zero of P from the period lattice of sn(u, i), in units of z_s:
    P_(n1,n2)^4 = -(1/4)((2n1+2n2+1) - i(2n2+1))^4 and
    Z_(n1,n2)^4 = -4((n1+n2) - i n2)^4, together with their lattice points
    (n1+2n2+1, -n1) and (n1+2n2, -n1).
    """
    pole = GaussianRational(2 * n1 + 2 * n2 + 1, -(2 * n2 + 1)) ** 4 * Fraction(-1, 4)
    zero = GaussianRational(n1 + n2, -n2) ** 4 * -4
    return (pole, lattice_predict(n1 + 2 * n2 + 1, -n1),
            zero, lattice_predict(n1 + 2 * n2, -n1) if (n1, n2) != (0, 0) else None)


def printed_lattice_forms(n1, n2):
    """ The printed pole and zero forms -(1/4)(a + i b)^4 with b = 2n2+1 and b = 2n2 """
    a = 2 * n1 + 2 * n2 + 1
    return (GaussianRational(a, 2 * n2 + 1) ** 4 * Fraction(-1, 4),
            GaussianRational(a, 2 * n2) ** 4 * Fraction(-1, 4))


def flow_radius_diagnostic(digits, steps=3):
    """ (n, radius of R_((-4)^n), |z_s| / 4^n) for n = 1 .. steps """
    zs = abs(zs_constant(digits))
    rows = []
    with mpmath.workdps(digits + GUARD_DIGITS):
        for n in range(1, steps + 1):
            roots = _roots(iterate(r_minus4(), n).den)
            radius = min(abs(r) for r in roots) if roots else mpmath.inf
            rows.append((n, radius, zs / 4 ** n))
    return rows


# suite

def _check_pade(config):
    geometric = pade(rf_series(RatFun(1, UniPoly([1, -1])), 4), 0, 1)
    constant = pade(rf_series(RatFun(3), 4), 1, 1)
    r81 = entry('R81')
    flow = flow_solve(preset('main'), 81, 18).series
    results = {
        'geometric': geometric.value == RatFun(1, UniPoly([1, -1])),
        'constant': constant.defect >= 1 and constant.value == RatFun(3),
        'R81': pade(flow, 9, 8).value == r81.rmap,
    }
    failed = [k for k, ok in results.items() if not ok]
    return outcome(not failed, {'failed': failed} if failed else None)


def _hunt_check(a1, name, maxdeg, order):

    def check(config):
        found = rational_hunt(preset('main'), a1, maxdeg, order)
        ok = found is not None and found == entry(name).rmap
        return outcome(ok, None if ok else 'found {}'.format(found))

    return check


def _check_no_rational(config):
    found = rational_hunt(preset('main'), 2, 10, 28)
    return outcome(found is None and delta_not_rational(), None if found is None else str(found))


def _check_zs(config):
    digits = max(config.digits, 43)
    with mpmath.workdps(digits + GUARD_DIGITS):
        zs = zs_constant(digits)
        diff = abs(zs - mpmath.mpf(ZS_PRINTED))
        ok = zs < 0 and diff < mpmath.mpf(10) ** -38
        return outcome(ok, {'z_s': mpmath.nstr(zs, 45), 'difference': mpmath.nstr(diff, 5)})


def _check_singularities(config):
    digits = config.digits
    zs = zs_constant(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        estimates = singularity_scan(p_series_from_ode(200), digits, zs)
        if not estimates:
            return outcome(False, 'no stable singularity')
        nearest = estimates[0]
        ok = abs(nearest.location - zs) < abs(zs) * mpmath.mpf(10) ** -6
        ring = [e for e in estimates if e.modulus < 30 * abs(zs)]
        unmatched = [mpmath.nstr(e.location, 12) for e in ring if e.lattice is None]
        found = {(e.lattice.x, e.lattice.y) for e in ring if e.lattice is not None}
        ok = ok and not unmatched and {(1, 0), (-7, -24), (-7, 24)} <= found
        return outcome(ok, {'nearest': mpmath.nstr(nearest.location, 15), 'unmatched': unmatched})


def _check_lattice(config):
    failed = []
    pt = lattice_predict(2, 1)
    if (pt.x, pt.y, pt.kind) != (-7, -24, POLE) or lattice_predict(1, 0).location != GaussianRational(1, 0):
        failed.append('predictions')
    if not (lattice_curve_member(pt, 2) and lattice_curve_member(pt, 1)):
        failed.append('curve membership of (2, 1)')
    for x, y in SINGULARITIES_IN_ZS:
        found = lattice_search(x, y, 8)
        if found is None or found.kind != POLE or not (lattice_curve_member(found, found.m1)
                                                        and lattice_curve_member(found, found.m2)):
            failed.append('{}{:+}i'.format(x, y))
    for n1 in range(-2, 3):
        for n2 in range(-2, 3):
            pole, pole_pt, zero, zero_pt = pole_zero_lattice(n1, n2)
            if pole != pole_pt.location or pole_pt.kind != POLE:
                failed.append('pole ({}, {})'.format(n1, n2))
            if zero_pt is not None and (zero != zero_pt.location or zero_pt.kind != ZERO):
                failed.append('zero ({}, {})'.format(n1, n2))
    return outcome(not failed, {'failed': failed} if failed else None)


def _check_printed_lattice(config):
    """ The printed pole form is the conjugate lattice; the printed zero form is offset """
    mismatch = []
    for n1 in range(-1, 2):
        for n2 in range(-1, 2):
            pole, _, zero, _ = pole_zero_lattice(n1, n2)
            printed_pole, printed_zero = printed_lattice_forms(n1, n2)
            if printed_pole != pole.conjugate():
                return outcome(False, 'printed pole form at ({}, {})'.format(n1, n2))
            if printed_zero != zero:
                mismatch.append((n1, n2))
    if mismatch:
        return reported({'printed zero form': '-(z_s/4)((2n1+2n2+1) + 2n2 i)^4',
                         'lattice zero form': '-4 z_s ((n1+n2) - n2 i)^4', 'differs at': mismatch[:3]})
    return outcome(True)


def _check_flow_radius(config):
    rows = flow_radius_diagnostic(config.digits)
    return reported([{'n': n, 'radius': mpmath.nstr(r, 8), 'z_s/4^n': mpmath.nstr(p, 8),
                      'ratio': mpmath.nstr(r / p, 4)} for n, r, p in rows])


def _check_s_branch(config):
    radius = radius_estimate(inverse_branch(r_minus4(), 60), config.digits)
    return outcome(abs(radius - 1) < 0.1, {'radius': mpmath.nstr(radius, 8)})


CHECKS = [
    Check('padehunt.pade', 'R81', _check_pade),
    Check('padehunt.hunt-81', 'R81', _hunt_check(81, 'R81', 10, 28)),
    Check('padehunt.hunt-minus4', 'iterR', _hunt_check(-4, 'R-4', 4, 16)),
    Check('padehunt.hunt-625', 'R625', _hunt_check(625, 'R625', 25, 60)),
    Check('padehunt.not-rational', 'func', _check_no_rational),
    Check('padehunt.zs', 'radius', _check_zs),
    Check('padehunt.singularities', 'radius', _check_singularities),
    Check('padehunt.lattice', 'xy', _check_lattice),
    Check('padehunt.printed-lattice', 'xy', _check_printed_lattice),
    Check('padehunt.flow-radius', 'limita1infty', _check_flow_radius),
    Check('padehunt.s-branch-radius', 'eqfuncS1over4', _check_s_branch),
]
