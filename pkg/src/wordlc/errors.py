"""Exception hierarchy shared by all modules."""


class WordLCError(Exception):
    """Base class for every error raised by this package."""


class ModulusMismatch(WordLCError, ValueError):
    pass


class DivisionByZero(WordLCError, ZeroDivisionError):
    pass


class DimensionMismatch(WordLCError, ValueError):
    pass


class NoSolution(WordLCError):
    """Linear system is inconsistent."""


class NonUnique(WordLCError):
    """Linear system is consistent but rank deficient."""


class Singular(WordLCError):
    pass


class SingularLeadingCoefficient(Singular):
    pass


class SingularConstantCoefficient(Singular):
    pass


class InsufficientData(WordLCError):
    """Not enough sequence terms to decide the requested quantity."""


class ZeroConstantTerm(WordLCError):
    pass


class OrderExceedsBound(WordLCError):
    pass


class SolveFailure(WordLCError):
    """Internal defect: a system that must be uniquely solvable was not."""


class EncodingOutOfRange(WordLCError, IndexError):
    pass


class BoundExceeded(WordLCError):
    pass


class NotPeriodic(WordLCError):
    """Starting point lies on a chain (nonzero preperiod), not on a cycle."""


class NotOnCycle(NotPeriodic):
    pass


class Exhausted(WordLCError):
    pass


class NotFound(WordLCError):
    pass


class TooLarge(WordLCError, ValueError):
    pass


class FormatError(WordLCError, ValueError):
    """Malformed input file."""
