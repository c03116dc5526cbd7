"""Exception hierarchy shared by the library and the command-line tool."""


class WellcovError(Exception):
    """Base class for every error raised by wellcov."""


class InputError(WellcovError, ValueError):
    """An argument is outside the domain of the operation (bad vertex, non-edge, ...)."""


class GraphFormatError(InputError):
    """Text could not be parsed as a graph or CNF formula.

    ``line`` is 1-based when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FamilyError(WellcovError):
    """The input graph is outside the family a recognizer is sound for."""


class PreconditionError(WellcovError):
    """A documented precondition of an operation does not hold.

    ``clause`` names the failed condition so callers can report it.
    """

    def __init__(self, clause, message=None):
        self.clause = clause
        super().__init__(message or f"precondition failed: {clause}")


class ContractError(WellcovError):
    """A caller handed in data violating an operation's contract."""


class SizeLimitError(WellcovError):
    """An exhaustive computation was asked to run beyond its size cap."""
