"""Exception hierarchy shared by the whole package."""


class HeredenumError(Exception):
    """Base class for all package errors."""


class DomainError(HeredenumError):
    """An argument is outside the operation's domain (bad vertex id, bad size)."""


class PreconditionError(HeredenumError):
    """A documented precondition of an operation does not hold."""


class ContractViolation(HeredenumError):
    """An internal structural guarantee failed; names the violated clause."""


class ConfigurationError(HeredenumError):
    """Unsupported class/mode/reduction combination requested."""


class UnsupportedPatternError(DomainError):
    """Pattern graph exceeds the supported order for induced-subgraph search."""


class InputFormatError(HeredenumError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
