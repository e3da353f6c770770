"""Exception hierarchy shared by every idrep module."""


class IdrepError(Exception):
    """Base class for all errors raised by idrep."""


class ValueOutOfRange(IdrepError, ValueError):
    pass


class InvalidWidth(IdrepError, ValueError):
    pass


class CatalogError(IdrepError, ValueError):
    pass


class SchemaParseError(IdrepError, ValueError):
    pass


class InvalidSchema(IdrepError, ValueError):
    pass


class InvalidId(IdrepError, ValueError):
    """Raised when an identifier fails schema validation.

    The offending :class:`~idrep.idschema.ValidationReport` is kept on
    ``report`` so callers can show every violation, not just the first.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DatasetOverflow(IdrepError, ValueError):
    pass


class EmptyDataset(IdrepError, ValueError):
    pass


class RepresentationMismatch(IdrepError, ValueError):
    pass


class MismatchedRunCounts(IdrepError, ValueError):
    pass


class ZeroTotalTime(IdrepError, ZeroDivisionError):
    pass


class DdlSyntaxError(IdrepError, ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnsupportedType(IdrepError, ValueError):
    def __init__(self, token, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"unsupported column type {token!r}{where}")
        self.token = token


class NoFittingType(IdrepError, ValueError):
    pass


class InvariantViolation(IdrepError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
