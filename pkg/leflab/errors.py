"""
Exception taxonomy for leflab.

Library code raises these; the CLI and the sweeps decide whether an error
aborts a run or is recorded per item.
"""

from typing import Optional


class LeflabError(Exception):
    """Base class for every error raised by leflab."""


class ConfigError(LeflabError):
    def __init__(self, key: str, value: str, reason: str):
        super().__init__(f"invalid {key}={value!r}: {reason}")
        self.key = key
        self.value = value


class DivisionByZero(LeflabError, ZeroDivisionError):
    pass


class FieldMismatch(LeflabError):
    pass


class ArityMismatch(LeflabError):
    pass


class InterpolationInconsistent(LeflabError):
    """A determinant interpolant disagreed with a direct evaluation (a bug, not bad input)."""


class NotArtinian(LeflabError):
    pass


class DegreeOutOfRange(LeflabError):
    pass


class GenericityFailure(LeflabError):
    """Random choices kept landing on a special configuration."""


class DuplicatePoints(LeflabError):
    pass


class BudgetExceeded(LeflabError):
    def __init__(self, message: str, steps: int = 0):
        super().__init__(message)
        self.steps = steps


class TooManyMinors(LeflabError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} maximal minors exceed the cap of {cap}")
        self.count = count
        self.cap = cap


class HintRejected(LeflabError):
    pass


class CriteriaDisagree(LeflabError):
    pass


class EmptySupport(LeflabError):
    pass


class AuditFailure(LeflabError):
    pass


class ParseError(LeflabError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        elif column is not None:
            where = f" (column {column})"
        super().__init__(message + where)
        self.message = message
        self.line = line
        self.column = column


class UnknownVariable(ParseError):
    pass


class NonHomogeneousGenerator(ParseError):
    pass
