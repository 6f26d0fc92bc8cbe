# Exceptions raised by the exact engine and the identity suites
#
# Every class derives from RgIsogenyError and from the closest builtin, so
# callers can catch either ArithmeticError/ValueError or the package base class.


class RgIsogenyError(Exception):
    pass


# arithmetic failures

class NotDivisible(RgIsogenyError, ArithmeticError):
    pass


class ZeroDenominator(RgIsogenyError, ZeroDivisionError):
    pass


class DivisionByZeroSeries(RgIsogenyError, ZeroDivisionError):
    pass


class NonIntegrableTerm(RgIsogenyError, ArithmeticError):
    pass


class InnerConstantTerm(RgIsogenyError, ArithmeticError):
    pass


class NotReversible(RgIsogenyError, ArithmeticError):
    pass


class NonUnitConstantTerm(RgIsogenyError, ArithmeticError):
    pass


class DegenerateComposition(RgIsogenyError, ArithmeticError):
    pass


class DegreeCapExceeded(RgIsogenyError, ArithmeticError):

    def __init__(self, degree, cap):
        super().__init__('degree {} exceeds the cap {}'.format(degree, cap))
        self.degree = degree
        self.cap = cap


class IrrationalLogDerivative(RgIsogenyError, ArithmeticError):
    pass


class ConstantMap(RgIsogenyError, ArithmeticError):
    pass


class DivergentPoint(RgIsogenyError, ArithmeticError):
    pass


class ResonantParameter(RgIsogenyError, ArithmeticError):

    def __init__(self, order):
        super().__init__('resonance at order {}'.format(order))
        self.order = order


class NonSolvableOrder(RgIsogenyError, ArithmeticError):

    def __init__(self, index):
        super().__init__('no solution at index {}'.format(index))
        self.index = index


class InsufficientOrder(RgIsogenyError, ArithmeticError):
    pass


class NonComposablePullback(RgIsogenyError, ArithmeticError):
    pass


# configuration and lookup failures

class BadC(RgIsogenyError, ValueError):
    pass


class PrecisionUnreachable(RgIsogenyError, ValueError):
    pass


class UnknownSuite(RgIsogenyError, ValueError):
    pass


class BadConfig(RgIsogenyError, ValueError):
    pass


class UnknownPreset(RgIsogenyError, ValueError):
    pass
