"""Exception hierarchy shared by the exact engine, the series evaluator and the CLI."""


class HypCFError(Exception):
    """Base class for all errors raised by cf3f2."""


class ParseError(HypCFError, ValueError):
    pass


class ConditionsUnmet(HypCFError):
    """A convergence, cone or well-definedness condition does not hold.

    ``failed`` lists short human-readable names of the violated conditions.
    """

    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)


class NotBalanced(HypCFError, ValueError):
    pass


class NegativeShift(HypCFError, ValueError):
    pass


class SingularShift(HypCFError, ArithmeticError):
    """A pivot factor of a basic contiguous matrix vanishes."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class DegenerateRelation(HypCFError, ArithmeticError):
    pass


class DegenerateCoefficient(HypCFError, ArithmeticError):
    def __init__(self, message, n=None):
        super().__init__(message)
        self.n = n


class NotWellDefined(DegenerateCoefficient):
    """A partial numerator r(n) vanishes, so the fraction terminates early."""


class BalancedIndexOne(HypCFError, ArithmeticError):
    pass


class SpecializationPole(HypCFError, ArithmeticError):
    pass


class Nonconvergent(HypCFError):
    pass


class PoleParameter(HypCFError, ValueError):
    pass


class TransformPole(PoleParameter):
    pass


class TZero(HypCFError, ArithmeticError):
    """sin(pi(b1-a0)) * sin(pi(b2-a0)) vanishes."""
