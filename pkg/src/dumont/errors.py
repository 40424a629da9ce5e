"""Exception hierarchy shared by every module of the package."""


class DumontError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DumontError, ValueError):
    pass


class NotABijection(ParseError):
    pass


class EmptyToken(ParseError):
    pass


class MixedFormat(ParseError):
    pass


class LimitExceeded(DumontError):
    """Requested size is above the configured generation cap."""


class OddInput(DumontError, ValueError):
    pass


class DomainError(DumontError, ValueError):
    pass


class OrderMismatch(DumontError, ValueError):
    pass


class ZeroConstantTerm(DumontError, ZeroDivisionError):
    pass


class ConstantTermNotOne(DumontError, ValueError):
    pass


class UnknownSeries(DumontError, KeyError):
    pass


class InternalInconsistency(DumontError):
    """Two independent constructions of the same object disagree."""


class PrecisionExhausted(DumontError, ArithmeticError):
    pass


class NotInFamily(DumontError, ValueError):
    pass


class MalformedStructure(DumontError):
    """A family member does not decompose as the structure theorem claims."""


class InvalidComposition(DumontError, ValueError):
    pass


class InvalidDyckPath(DumontError, ValueError):
    pass


class UnknownFamily(DumontError, KeyError):
    pass


class UnknownShape(DumontError, KeyError):
    pass


class UnknownTheorem(DumontError, KeyError):
    pass
