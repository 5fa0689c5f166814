"""Exception types raised by freeqg."""


class FreeQGError(ValueError):
    """Base class for domain errors."""


class WordParseError(FreeQGError):
    """Raised when text is not a word over {a, b} (or the literal ``e``)."""


class NotOAdmissibleError(FreeQGError):
    """Raised when F * conj(F) is not a nonzero real multiple of the identity."""


class SingularMatrixError(FreeQGError):
    pass


class DimensionError(FreeQGError):
    pass


class GuardrailError(FreeQGError):
    """Raised when a tensor computation exceeds the desk-scale limits.

    Pass ``force=True`` (``--force`` on the command line) to bypass.
    """
