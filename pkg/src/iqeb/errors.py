"""Exception hierarchy.

Every error derives from the builtin a caller would naturally catch, so
``except ValueError`` keeps working around parsing and contract checks.
"""

from __future__ import annotations


class IqebError(Exception):
    """Base class for all errors raised by the package."""


class FcidumpParseError(IqebError, ValueError):
    """Malformed FCIDUMP header or integral line."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if field is not None:
            where.append(f"field {field}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class IntegralIntegrityError(IqebError, ValueError):
    """Integral tables are inconsistent (conflicting duplicates, broken symmetry)."""


class ContractViolation(IqebError, ValueError):
    """A documented precondition of an operation does not hold."""


class ConvergenceError(IqebError, RuntimeError):
    """An iterative solver hit its iteration cap without converging."""


__all__ = [
    "IqebError",
    "FcidumpParseError",
    "IntegralIntegrityError",
    "ContractViolation",
    "ConvergenceError",
]
