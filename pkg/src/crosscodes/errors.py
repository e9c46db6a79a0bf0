"""Exception types shared across the package."""

from __future__ import annotations


class CrossCodeError(Exception):
    """Base class for all package errors."""


class ModulusMismatchError(CrossCodeError, ValueError):
    """Operands live in different rings or have incompatible shapes."""


class NotInvertibleError(CrossCodeError, ArithmeticError):
    """An even residue has no multiplicative inverse modulo 2^m."""


class ParameterError(CrossCodeError, ValueError):
    """Construction or bound parameters violate a precondition."""


class BudgetExceededError(CrossCodeError, RuntimeError):
    """An exhaustive computation would exceed its configured budget."""


class AmbiguousSyndromeError(CrossCodeError, RuntimeError):
    """Two different cross errors produce the same syndrome.

    This cannot happen for a code that actually corrects cross errors of the
    requested magnitude, so it signals a bad parity check matrix.
    """
