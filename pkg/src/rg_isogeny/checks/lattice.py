# One dimensional Ising decimation maps and the chi(2) curve reduction
#
# T_N acts on x = exp(4K) and z = exp(2H). In zero field it is the decimation
# tanh K -> (tanh K)^N, so the reduction is tested with x = ((1 + t)/(1 - t))^2.

import logging
from dataclasses import dataclass
from itertools import combinations

from rg_isogeny.algebra.exactnum import MultiPoly, UniPoly
from rg_isogeny.algebra.ratfun import BiRatFun, RatFun, RatMap2, map2_compose, map2_equal
from rg_isogeny.algebra.series import TruncatedSeries, geometric
from rg_isogeny.errors import BadConfig, DegreeCapExceeded
from rg_isogeny.report import Check, outcome

logger = logging.getLogger(__name__)

PRODUCT_ORDER_CAP = 256
COMPOSITE_LABELS = (4, 6, 8, 9)
COMMUTATION_CAP = 30


@dataclass(frozen=True)
class IsingMap:
    label: int
    map: RatMap2

    def __call__(self, x, z):
        return self.map(x, z)

    def total_degree(self):
        return self.map.total_degree()

    def compose(self, inner, cap=None):
        """ self o inner, labelled N M """
        return IsingMap(self.label * inner.label, map2_compose(self.map, inner.map, cap))

    def commutes_with(self, other, cap=None):
        return map2_equal(map2_compose(self.map, other.map, cap), map2_compose(other.map, self.map, cap))

    def zero_field(self):
        """ (x_N, z_N) at z = 1 as RatFuns in t, with x = ((1 + t)/(1 - t))^2 """
        x = RatFun(UniPoly([1, 1]), UniPoly([1, -1])) ** 2
        return self.map.first(x, 1), self.map.second(x, 1)

    def reduces_to_power(self):
        x_n, z_n = self.zero_field()
        t_n = UniPoly.monomial(self.label)
        return z_n == 1 and x_n == RatFun(1 + t_n, 1 - t_n) ** 2


def t2():
    x, z = MultiPoly.variables(2)
    first = BiRatFun((x + z) * (x * z + 1), x * (z + 1) ** 2)
    second = BiRatFun(z * (x * z + 1), x + z)
    return IsingMap(2, RatMap2(first, second, label=2))


def t3():
    x, z = MultiPoly.variables(2)
    up = z ** 2 * x + 2 * z + 1
    down = z ** 2 + 2 * z + x
    first = BiRatFun(x * up * down, (z ** 2 * x + z + x * z + x) ** 2)
    second = BiRatFun(z * up, down)
    return IsingMap(3, RatMap2(first, second, label=3))


def composite_maps(cap):
    """
    T_4, T_6, T_8 and T_9 built from T_2 and T_3. Every composite whose
    expected degree exceeds cap is left out.
    """
    generators = {2: t2(), 3: t3()}
    recipes = {4: (2, 2), 6: (2, 3), 8: (2, 4), 9: (3, 3)}
    maps = dict(generators)
    for label in COMPOSITE_LABELS:
        outer, inner = recipes[label]
        if outer not in maps or inner not in maps:
            continue
        try:
            maps[label] = maps[outer].compose(maps[inner], cap)
        except DegreeCapExceeded as e:
            logger.info('T_%d skipped: %s', label, e)
    return maps


def ising_maps_verify(cap):
    """
    Labelled results for the zero field sector of every generated map and for
    the commutation of each pair whose composite stays within COMMUTATION_CAP.
    """
    maps = composite_maps(cap)
    results = []
    for n, m in combinations(sorted(maps), 2):
        try:
            ok = maps[n].commutes_with(maps[m], min(cap, COMMUTATION_CAP))
            results.append(('T_{} T_{} = T_{} T_{}'.format(n, m, m, n), ok))
        except DegreeCapExceeded:
            logger.debug('commutation of T_%d and T_%d is beyond the degree cap', n, m)
    for label, t in sorted(maps.items()):
        results.append(('T_{} label'.format(label), t.map.label == label))
        results.append(('T_{} zero field'.format(label), t.reduces_to_power()))
    return results


def product_identity(base, order):
    """ prod_{n<K} (1 + x^(b^n) + ... + x^((b-1) b^n)) against 1/(1 - x) to x^order """
    product = TruncatedSeries.constant(1, order)
    step = 1
    while step < order:
        factor = TruncatedSeries([1 if k % step == 0 else 0 for k in range(min(base * step, order))], 0, order)
        product = product * factor
        step *= base
    return product == geometric(order)


def product_identities(order):
    if order > PRODUCT_ORDER_CAP:
        raise BadConfig('product identities are checked up to order {}, got {}'.format(PRODUCT_ORDER_CAP, order))
    return [('base {}'.format(base), product_identity(base, order)) for base in (2, 3, 5)]


@dataclass(frozen=True)
class Chi2Witness:
    """
    The chi(2) integrand in the variables (q, Z, w, C) with q = w C and
    Z = w z. The scaled quantities keep every expression polynomial:
    two_w_a = 2 w A and w_c = w C.
    """

    pencil: MultiPoly
    two_w_a: MultiPoly
    w_c: MultiPoly

    @classmethod
    def printed(cls):
        q, Z, w, C = MultiPoly.variables(4)
        pencil = (256 * (1 - 2 * q) ** 2 * (q ** 2 - w ** 2) * Z ** 2 * w ** 4
                  + (2 * q - 1 + 2 * w) ** 5 * (2 * q - 1 - 2 * w) ** 5)
        # A = 1/(2w) - C
        return cls(pencil=pencil, two_w_a=1 - 2 * w * C, w_c=w * C)

    def on_q(self, poly):
        """ Substitute q = w C. """
        q, Z, w, C = MultiPoly.variables(4)
        return poly.evaluate([self.w_c, Z, w, C])

    def curve(self):
        """
        1024 w^10 (A^2 (C^2 - 1) z^2 + (A^2 - 1)^5) with z = Z/w, written in
        the scaled quantities: A^2 = two_w_a^2/(4 w^2) and C^2 - 1 = (w_c^2 - w^2)/w^2.
        """
        q, Z, w, C = MultiPoly.variables(4)
        a2 = self.two_w_a ** 2
        return 256 * a2 * (self.w_c ** 2 - w ** 2) * Z ** 2 * w ** 4 + (a2 - 4 * w ** 2) ** 5


def chi2_reduction(witness=None):
    witness = witness or Chi2Witness.printed()
    q, Z, w, C = MultiPoly.variables(4)
    return [
        ('A = (1 - 2q)/(2w)', witness.on_q(1 - 2 * q) == witness.two_w_a),
        ('A^2 - 1 factors', witness.on_q((1 - 2 * q - 2 * w) * (1 - 2 * q + 2 * w))
         == witness.two_w_a ** 2 - 4 * w ** 2),
        ('w-pencil', witness.on_q(witness.pencil) == witness.curve()),
        ('dq = w dC', witness.w_c.derivative(3) == w),
    ]


def _labelled(results):
    failed = [label for label, ok in results if not ok]
    return outcome(not failed, {'failed': failed} if failed else None)


def _check_ising(config):
    return _labelled(ising_maps_verify(config.degree_cap))


def _check_products(config):
    return _labelled(product_identities(min(max(config.order, 81), PRODUCT_ORDER_CAP)))


def _check_chi2(config):
    return _labelled(chi2_reduction())


CHECKS = [
    Check('lattice.ising', 'TMN', _check_ising),
    Check('lattice.products', 'TN', _check_products),
    Check('lattice.chi2', 'C1', _check_chi2),
]
