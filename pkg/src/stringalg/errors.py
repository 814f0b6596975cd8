"""Exception hierarchy shared by the whole package."""


class StringAlgError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(StringAlgError):
    """Syntax error in an algebra file; carries 1-based line and column."""

    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class SemanticError(StringAlgError):
    """Well-formed input that violates a semantic rule (unknown ids,
    non-composable paths, and so on).  Line/col are optional."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col


class InfiniteDimensionalError(SemanticError):
    """The presented algebra has ideal-avoiding oriented cycles."""


class PreconditionError(StringAlgError):
    """An operation was invoked outside its stated precondition."""


class CorruptPresentationError(StringAlgError):
    """Internal consistency violated; indicates corrupted input data."""


class SearchBudgetExceeded(StringAlgError):
    """A bounded exhaustive search ran out of its node budget."""


class DozedStringAnomaly(StringAlgError):
    """A pumped walk expected to be a string is not one.

    Surfaced instead of silently re-factorizing; carries the offending
    walk so callers can inspect it.
    """

    def __init__(self, message, walk=None):
        super().__init__(message)
        self.walk = walk
