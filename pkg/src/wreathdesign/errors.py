"""Exception types shared across the package."""


class WreathError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(WreathError, ValueError):
    """Operands live in different groups (mismatched ``n`` or ``r``)."""


class ConsistencyError(WreathError, ArithmeticError):
    """An exact identity failed, e.g. a multiplicity came out non-integral.

    This always signals a bug or corrupted input, never a legitimate answer.
    """


class ScaleGuardError(WreathError, RuntimeError):
    """A computation would exceed the desk-scale limits; pass ``allow_big=True`` to override."""
