"""Exception hierarchy shared by every module of the package."""


class ApostolError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDenominator(ApostolError, ZeroDivisionError):
    pass


class ZeroDivisor(ApostolError, ZeroDivisionError):
    pass


class PoleAtLambda(ApostolError, ZeroDivisionError):
    """A rational function in lambda was evaluated at one of its poles."""


class DomainError(ApostolError, ValueError):
    """A numeric argument lies outside the domain where a value is defined."""


class OrderMismatch(ApostolError, ValueError):
    pass


class NonUnitConstantTerm(ApostolError, ZeroDivisionError):
    pass


class IndexBeyondOrder(ApostolError, IndexError):
    pass


class OrderTooSmall(ApostolError, ValueError):
    pass


class BadIndex(ApostolError, ValueError):
    pass


class MissingParameter(ApostolError, ValueError):
    pass
