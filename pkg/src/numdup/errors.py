"""Exception hierarchy.

Input problems derive from ``NumdupError``. ``InternalMismatch`` is kept
separate on purpose: it is raised when two quantities that must agree by
theory differ at runtime, which always points at a bug.
"""


class NumdupError(Exception):
    """Base class for input and precondition errors."""


class EmptyGenerators(NumdupError, ValueError):
    pass


class GcdNotOne(NumdupError, ValueError):
    pass


class Overflow(NumdupError, OverflowError):
    pass


class NotMember(NumdupError, ValueError):
    pass


class BudgetExceeded(NumdupError, ValueError):
    pass


class AmbientMismatch(NumdupError, ValueError):
    pass


class NotAnIdeal(NumdupError, ValueError):
    pass


class NotNested(NumdupError, ValueError):
    pass


class EvenB(NumdupError, ValueError):
    pass


class BNotInS(NumdupError, ValueError):
    pass


class IdealNotIntegral(NumdupError, ValueError):
    pass


class NotAlmostGorenstein(NumdupError, ValueError):
    pass


class ImproperSemigroup(NumdupError, ValueError):
    pass


class NotIntermediate(NumdupError, ValueError):
    pass


class NotIntegralShift(NumdupError, ValueError):
    pass


class InternalMismatch(AssertionError):
    """Two routes that are equal in theory disagreed."""
