"""Exception hierarchy shared by all airymellin modules."""


class AiryMellinError(Exception):
    """Base class for every error raised by this package."""


class DomainError(AiryMellinError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class PoleError(DomainError):
    """A gamma function or series denominator hits a pole."""


class DegenerateParameterError(DomainError):
    """A transformation formula is singular for the given parameters."""


class ConvergenceError(AiryMellinError, ArithmeticError):
    """A series or adaptive scheme did not converge within its budget."""


class AiryOverflowError(AiryMellinError, OverflowError):
    """Bi(x) (or a product containing it) exceeds the double range."""


class ConsistencyError(AiryMellinError, AssertionError):
    """Two independent evaluation routes disagree beyond tolerance."""
