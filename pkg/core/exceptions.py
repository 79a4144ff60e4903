# File: core/exceptions.py

class QCalculusError(Exception):
    """Base class for every error raised by the q-calculus apps"""
    exit_code = 1


class QDomainError(QCalculusError, ValueError):
    """Parameters or points outside the domain of an operation"""
    exit_code = 2


class NonConvergenceError(QCalculusError):
    """A truncated series, product or lattice sum did not settle within max_terms"""
    exit_code = 3


class PrecisionLossError(NonConvergenceError):
    """An alternating series lost too many digits to cancellation"""


class NumericalToleranceError(QCalculusError):
    """A value that must be non-negative came out negative beyond rounding"""
    exit_code = 3


class EnumerationBudgetExceeded(QCalculusError):
    """Brute-force tree enumeration would exceed the configured budget"""
    exit_code = 4
