__all__ = [
            "HillBandError", "FormatError", "SymmetryViolationError",
            "UsageError", "IntegrationError", "NumericalBlowupError",
            "BracketingError", "NoSignChangeError",
]


class HillBandError(Exception):
    """Base class of every error raised by HillBandPy."""


class FormatError(HillBandError, ValueError):
    """Malformed input: duplicate harmonics, bad potential documents."""


class SymmetryViolationError(FormatError):
    """A harmonic table whose q(-2m) is not the conjugate of q(2m)."""


class UsageError(HillBandError, ValueError):
    """A caller broke a precondition of a routine."""


class IntegrationError(HillBandError, RuntimeError):
    """The one-step integrator could not reach the end of the interval."""


class NumericalBlowupError(IntegrationError):
    """The propagated state stopped being finite."""


class BracketingError(HillBandError, RuntimeError):
    """The expected number of gap endpoints was not bracketed."""


class NoSignChangeError(BracketingError):
    """A refinement bracket on which the target is not crossed."""
