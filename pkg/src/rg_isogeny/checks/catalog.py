# Catalog of explicit rational isogenies and the identities tying them together
#
# Members of the main family are stored through their D-polynomial:
# R(z) = z (N(z) / D(z))^4 with N(z) = z^d D(1/z), so R'(0) = lead(D)^4.

import dataclasses
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from rg_isogeny.algebra.diffop import (LinDiffOp, PowerConjugator, h0_printed, h1_printed, h2_printed,
                                       op_apply_series, op_equal_up_to_left_factor, op_pullback)
from rg_isogeny.algebra.exactnum import GaussianRational, UniPoly, to_text
from rg_isogeny.algebra.hypergeom import F21Params
from rg_isogeny.algebra.ratfun import RatFun, rf_compose, rf_series
from rg_isogeny.checks.conjugation import arctanh_generator, generator_closed_form
from rg_isogeny.checks.rotabaxter import (condcompo_check, flow_solve, flow_solve_parametric, gauss_system,
                                          infinitesimal_generator, iterate, mad_check, main_family_map, preset,
                                          r_minus4, t_map, t_star_map)
from rg_isogeny.constants import (D_81, D_625_FACTORS, D_2401, D_14641, D_28561_D36, D_28561_SEXTIC,
                                  DEFAULT_DEGREE_CAP, F_N11_PRINTED, R_TIERS_PRINTED,
                                  SERIES_FALLBACK_ORDER, T_MISSPRINT_PRINTED)
from rg_isogeny.errors import DegreeCapExceeded
from rg_isogeny.report import Check, outcome, reported

logger = logging.getLogger(__name__)

PALINDROME_INVERSE = 'commutes-with-J-as-inverse'
PALINDROME_IDENTITY = 'commutes-with-J-as-identity'
PALINDROME_NEITHER = 'neither'

VERIFY_ORDER = 20

# composed maps up to this degree also get the covariance residual checked
COVARIANT_COMPOSITION_DEGREE = 64


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    name: str
    rmap: RatFun
    a1: object
    system: str = 'main'
    printed: dict = dataclasses.field(default_factory=dict, compare=False)

    @property
    def field(self):
        return self.rmap.field

    @property
    def degree(self):
        return self.rmap.degree

    def to_json(self):
        return {'name': self.name,
                'field': self.field,
                'system': self.system,
                'a1': None if self.a1 is None else to_text(self.a1),
                'degree': self.degree,
                'map': self.rmap.to_json(),
                'printed': {k: v.to_json() for k, v in self.printed.items()}}


def _family_entry(name, dpoly, **printed):
    if not isinstance(dpoly, UniPoly):
        dpoly = UniPoly(dpoly)
    return CatalogEntry(name, main_family_map(dpoly), dpoly.leading ** 4, printed=dict(D=dpoly, **printed))


@lru_cache(maxsize=None)
def catalog():
    r = r_minus4()
    entries = [
        CatalogEntry('R-4', r, -4),
        CatalogEntry('R16', iterate(r, 2), 16),
        CatalogEntry('R-64', iterate(r, 3), -64),
        CatalogEntry('J', RatFun.variable().reciprocal(), None),
        CatalogEntry('T', t_map(), GaussianRational(-7, -24)),
        CatalogEntry('T*', t_star_map(), GaussianRational(-7, 24)),
        _family_entry('R81', D_81),
        _family_entry('R625', UniPoly(D_625_FACTORS[0]) * UniPoly(D_625_FACTORS[1])),
        _family_entry('R2401', D_2401),
        _family_entry('R14641', D_14641),
        _family_entry('R28561', UniPoly(D_28561_SEXTIC) * UniPoly(D_28561_D36),
                      D6=UniPoly(D_28561_SEXTIC), D36=UniPoly(D_28561_D36)),
    ]
    return {e.name: e for e in entries}


def entry(name):
    try:
        return catalog()[name]
    except KeyError:
        raise KeyError('no catalog entry {!r}; available: {}'.format(name, ', '.join(catalog()))) from None


def export_entry(name):
    return entry(name).to_json()


def catalog_verify(e, order=VERIFY_ORDER):
    """ mad_check against the entry's system, then the series of R against the flow at R'(0) """
    system = preset(e.system)
    if not mad_check(system.a, e.rmap):
        return outcome(False, 'covariance residual is nonzero')
    if e.a1 is None:
        return outcome(True)
    flow = flow_solve(system, e.a1, order).series
    diff = rf_series(e.rmap, order).first_difference(flow)
    if diff is not None:
        return outcome(False, 'series differs from the flow at a1 = {} from z^{}'.format(e.a1, diff))
    return outcome(True)


def pairwise_commute(e1, e2, cap=DEFAULT_DEGREE_CAP):
    """ Exact R1 o R2 = R2 o R1; raises DegreeCapExceeded past the cap """
    return rf_compose(e1.rmap, e2.rmap, cap) == rf_compose(e2.rmap, e1.rmap, cap)


def commute_or_series(e1, e2, cap=DEFAULT_DEGREE_CAP, order=SERIES_FALLBACK_ORDER):
    """ pairwise_commute within the cap, agreement of both series compositions past it """
    try:
        return pairwise_commute(e1, e2, cap)
    except DegreeCapExceeded as e:
        logger.debug('%s o %s: %s, comparing series to order %d', e1.name, e2.name, e, order)
    s1 = rf_series(e1.rmap, order)
    s2 = rf_series(e2.rmap, order)
    return s1(s2).agrees_with(s2(s1))


def composition_multiplier(e1, e2, order=4):
    return (rf_series(e1.rmap, order)(rf_series(e2.rmap, order)))[1]


def multiplier_multiplicativity():
    """ Pairs of flow entries whose composition does not have multiplier a1 * b1 """
    return [(e1.name, e2.name) for e1, e2 in combinations(_flow_entries(), 2)
            if composition_multiplier(e1, e2) != e1.a1 * e2.a1]


def magic_identities(e):
    """
    Both identities cleared of denominators, with N = z^d D(1/z):

        (4z)^d D(-(1-z)^2 / (4z)) = D N
        (1-z) K^2 = D^4 - z N^4,   K = (1-z)^(2d) D(-4z / (1-z)^2)

    Returns (first, second).
    """
    dpoly = e.printed['D']
    d = dpoly.degree
    npoly = dpoly.reciprocal()
    one_minus_sq = UniPoly([1, -2, 1])
    first = dpoly.homogenize(-one_minus_sq, UniPoly([0, 4]), d) == dpoly * npoly
    k = dpoly.homogenize(UniPoly([0, -4]), one_minus_sq, d)
    second = UniPoly([1, -1]) * k * k == dpoly ** 4 - UniPoly([0, 1]) * npoly ** 4
    return first, second


def checksum_ok(dpoly):
    """ D(1)^2 = 4^d and D(-1)^2 = 4^d D(1), the first identity at z = -1 and z = 1 """
    if not isinstance(dpoly, UniPoly):
        dpoly = UniPoly(dpoly)
    d = dpoly.degree
    return dpoly(1) ** 2 == 4 ** d and dpoly(-1) ** 2 == 4 ** d * dpoly(1)


def printed_polynomial_checksums():
    """ Names of the stored D-polynomials failing checksum_ok """
    names = [e.name for e in catalog().values() if 'D' in e.printed]
    return [name for name in names if not checksum_ok(entry(name).printed['D'])]


def palindromy_check(e):
    flipped = e.rmap.inverse_arg()
    if flipped == e.rmap.reciprocal():
        return PALINDROME_INVERSE
    if flipped == e.rmap:
        return PALINDROME_IDENTITY
    return PALINDROME_NEITHER


def hauptconj_check(n):
    """
    The pullback of H0 by R_-4^(n) agrees, up to a left factor, with
    C H0 C^-1 where C = z^(1/4) R^(-1/4). For n = 0, 1, 2 the conjugate is
    also compared with the printed H0, H1, H2.
    """
    h0 = h0_printed()
    rmap = iterate(r_minus4(), n)
    # conjugate_by_power(X) is X^-1 o op o X, so X = C^-1
    expected = h0.conjugate_by_power(PowerConjugator([(RatFun.variable(), Fraction(-1, 4)),
                                                      (rmap, Fraction(1, 4))]))
    ok = op_equal_up_to_left_factor(op_pullback(h0, rmap), expected)
    printed = {0: h0, 1: h1_printed(), 2: h2_printed()}.get(n)
    if printed is not None:
        ok = ok and printed == expected
    return ok


# other covariant systems

def _rf(num, den=(1,)):
    return RatFun(UniPoly(num), UniPoly(den))


def mobius_map(t):
    """ t z / (1 + (t-1) z) """
    return _rf([0, t], [1, t - 1])


def other_families_verify():
    """ (label, ok) pairs for the secondary systems and the special parameter cases """
    sixth = preset('sixth')
    third = preset('third')
    arctanh = preset('arctanh')
    r_sixth = _rf([0, -27], [1, -12, 48, -64])
    r_tiers = RatFun(UniPoly([0, 1]) * UniPoly([-2, 1]) ** 3, UniPoly([1, -2]) ** 3)
    t_seven = RatFun(-27 * UniPoly([0, 1]) * UniPoly([1, -1]) * UniPoly([1, -1, 1]) ** 3,
                     UniPoly([1, -6, 3, 1]) ** 3)
    r_arctanh = _rf([0, 4], [1, 2, 1])
    inversion = RatFun.variable().reciprocal()
    order = 20
    results = [
        ('sixth: -27z/(1-4z)^3', mad_check(sixth.a, r_sixth)
         and rf_series(r_sixth, order) == flow_solve(sixth, -27, order).series),
        ('third: z(z-2)^3/(1-2z)^3', mad_check(third.a, r_tiers)
         and rf_series(r_tiers, 5).coefficients() == R_TIERS_PRINTED
         and rf_series(r_tiers, order) == flow_solve(third, -8, order).series),
        ('third: degree-7 map', mad_check(third.a, t_seven)
         and rf_series(t_seven, 7).coefficients() == T_MISSPRINT_PRINTED),
        ('third: the two maps commute', rf_compose(r_tiers, t_seven) == rf_compose(t_seven, r_tiers)),
        ('arctanh: 4z/(1+z)^2', mad_check(arctanh.a, r_arctanh) and mad_check(arctanh.a, iterate(r_arctanh, 2))),
        ('arctanh: 1/z', mad_check(arctanh.a, inversion)),
    ]
    results.append(('arctanh: generator', arctanh_generator(order)
                    and condcompo_check(infinitesimal_generator(arctanh, order), r_arctanh, order)))
    # special parameters of the general family
    results.extend([
        ('1/z at a = 2b', mad_check(gauss_system(Fraction(2, 5), Fraction(1, 5), 'b').a, inversion)),
        ('1-z at a + b = 1', mad_check(gauss_system(Fraction(1, 3), Fraction(2, 3), 'a').a, _rf([1, -1]))
         and mad_check(gauss_system(Fraction(1, 3), Fraction(2, 3), 'b').a, _rf([1, -1]))),
        ('Moebius at a = 1 + b', mad_check(gauss_system(Fraction(3, 2), Fraction(1, 2), 'b').a, mobius_map(3))
         and iterate(mobius_map(3), 3) == mobius_map(27)),
        ('scaling at a = 0', mad_check(gauss_system(0, Fraction(1, 3), 'b').a, _rf([0, 5]))),
        ('1-t(1-z) at b = 1, c = 2', mad_check(gauss_system(Fraction(1, 2), 1, 'b').a, _rf([-2, 3]))
         and iterate(_rf([-2, 3]), 2) == _rf([-8, 9])),
        ('order-3 map (z-1)/z', mad_check(gauss_system(Fraction(2, 3), Fraction(1, 3), 'b').a, _rf([-1, 1], [0, 1]))
         and iterate(_rf([-1, 1], [0, 1]), 3) == RatFun.variable()),
    ])
    return results


GENUS2_PRINTED = [
    (Fraction(-2, 7), [1]),
    (Fraction(1, 637), [-87, 17]),
    (Fraction(-2, 84721), [3438, -856, 113]),
    (Fraction(-1, 38548055), [2095059, -552261, 121194, 3674]),
]

# a3, a4 as scalar * poly(a1) * a1 (a1 - 1)
GENUS_N_PRINTED = {
    'N7': ((Fraction(-1, 1296), [127, -1]), (Fraction(-1, 134136), [7499, 185, 254])),
    'N11': ((Fraction(-1, 8092), [367, 143]), (Fraction(-1, 206346), [5011, 2473, 1186])),
}


def higher_genus_flows():
    """ (label, ok) pairs for the genus-2 and general-N flows """
    m = UniPoly([0, -1, 1])
    results = []
    genus2 = flow_solve_parametric(preset('genus2'), 6)
    printed = [scale * m * UniPoly(poly) for scale, poly in GENUS2_PRINTED]
    results.append(('genus2 a2..a5', genus2.coeffs[2:6] == printed))
    for name, n in (('genus2', 6), ('N7', 7), ('N11', 11)):
        flow = flow_solve_parametric(preset(name), 3)
        results.append(('{} a2 = -2/(2N-5) a1(a1-1)'.format(name), flow.coeffs[2] == Fraction(-2, 2 * n - 5) * m))
    for name, terms in GENUS_N_PRINTED.items():
        flow = flow_solve_parametric(preset(name), 5)
        expected = [scale * m * UniPoly(poly) for scale, poly in terms]
        results.append(('{} a3, a4'.format(name), flow.coeffs[3:5] == expected))
    system = preset('N11')
    f = infinitesimal_generator(system, 30)
    closed = generator_closed_form(F21Params(1, Fraction(15, 11), Fraction(17, 11)), 30)
    adjoint = LinDiffOp([0, system.a, 1]).adjoint()
    results.append(('N11 generator', f.coefficients(0, len(F_N11_PRINTED)) == F_N11_PRINTED
                    and f.agrees_with(closed, 13) and op_apply_series(adjoint, f).is_zero()))
    return results


# suite

def _flow_entries():
    return [e for e in catalog().values() if e.a1 is not None]


def _check_entry(name):
    def check(config):
        return catalog_verify(entry(name))
    return check


def _check_commutation(config):
    failed = [(e1.name, e2.name) for e1, e2 in combinations(_flow_entries(), 2)
              if not commute_or_series(e1, e2, config.degree_cap)]
    return outcome(not failed, {'noncommuting': failed} if failed else None)


def _check_multipliers(config):
    bad = multiplier_multiplicativity()
    return outcome(not bad, {'pairs': bad} if bad else None)


def _check_composition(config):
    """ small compositions stay covariant """
    bad = [(e1.name, e2.name) for e1, e2 in combinations(_flow_entries(), 2)
           if e1.degree * e2.degree <= COVARIANT_COMPOSITION_DEGREE
           and not mad_check(preset(e1.system).a, rf_compose(e1.rmap, e2.rmap))]
    return outcome(not bad, {'pairs': bad} if bad else None)


def _check_magic(config):
    results = {}
    for name in ('R81', 'R2401', 'R14641', 'R28561'):
        first, second = magic_identities(entry(name))
        results[name] = {'first': first, 'second': second}
    ok = all(r['first'] for r in results.values())
    ok = ok and all(results[name]['second'] for name in ('R81', 'R2401', 'R14641'))
    return outcome(ok, results)


def _check_printed_polynomials(config):
    bad = printed_polynomial_checksums()
    d_28561 = entry('R28561').printed
    if d_28561['D'].degree != 42 or d_28561['D'] != d_28561['D6'] * d_28561['D36']:
        bad.append('R28561 factors')
    if entry('R625').rmap != rf_compose(t_map(), t_star_map()):
        bad.append('R625 = T o T*')
    return outcome(not bad, {'failed': bad} if bad else None)


def _check_palindromy(config):
    expected = {'R81': PALINDROME_INVERSE, 'R16': PALINDROME_IDENTITY, 'R-4': PALINDROME_IDENTITY}
    found = {name: palindromy_check(entry(name)) for name in expected}
    return outcome(found == expected, found)


def _check_odd_palindromy(config):
    return reported({name: palindromy_check(entry(name)) for name in ('R81', 'R625', 'R2401', 'R14641', 'R28561')})


def _check_haupt(config):
    return outcome(all(hauptconj_check(n) for n in (0, 1, 2)))


def _labelled(results):
    failed = [label for label, ok in results if not ok]
    return outcome(not failed, {'failed': failed} if failed else None)


def _check_other_families(config):
    return _labelled(other_families_verify())


def _check_higher_genus(config):
    return _labelled(higher_genus_flows())


ENTRY_ANCHORS = [('R-4', 'mad'), ('R16', 'iterR'), ('R-64', 'iterR'), ('J', 'mad'), ('T', 'Tz'), ('T*', 'Tbar'),
                 ('R81', 'R81'), ('R625', 'R625'), ('R2401', 'R2401'), ('R14641', 'R14641'), ('R28561', 'R28561')]

CHECKS = [Check('isogenies.verify.' + name, anchor, _check_entry(name)) for name, anchor in ENTRY_ANCHORS] + [
    Check('isogenies.commute', 'commute', _check_commutation),
    Check('isogenies.multipliers', 'commute', _check_multipliers),
    Check('isogenies.composition', 'mad', _check_composition),
    Check('isogenies.magic', 'magic2401', _check_magic),
    Check('isogenies.printed-polynomials', 'palindrom', _check_printed_polynomials),
    Check('isogenies.palindromy', 'palindrom', _check_palindromy),
    Check('isogenies.odd-palindromy', 'palindrom', _check_odd_palindromy),
    Check('isogenies.hauptconj', 'vid', _check_haupt),
    Check('isogenies.other-families', 'Rtiers', _check_other_families),
    Check('isogenies.higher-genus', 'orderbyorder2', _check_higher_genus),
]
