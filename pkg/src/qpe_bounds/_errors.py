"""Exception hierarchy shared by every module."""


class QPEBoundsError(Exception):
    """Base class for all library errors."""


class DomainError(QPEBoundsError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BudgetExceededError(QPEBoundsError):
    """An exact evaluation would exceed the configured term or memory cap."""


class UnreachableTargetError(QPEBoundsError):
    """No admissible guard-qubit count reaches the requested failure rate."""
