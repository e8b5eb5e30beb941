"""Engine errors with stable machine-readable codes for the CLI JSON mode."""


class SpectrumError(Exception):
    """Base class; ``code`` is the stable identifier surfaced in JSON output."""

    code = "Error"


class DuplicateElement(SpectrumError):
    code = "DuplicateElement"


class UnknownElement(SpectrumError):
    code = "UnknownElement"


class CycleDetected(SpectrumError):
    code = "CycleDetected"


class NotUpwardClosed(SpectrumError):
    code = "NotUpwardClosed"


class EmptyChain(SpectrumError):
    code = "EmptyChain"


class NotAChain(SpectrumError):
    code = "NotAChain"


class ShapeMismatch(SpectrumError):
    code = "ShapeMismatch"


class Inconsistent(SpectrumError):
    code = "Inconsistent"


class UnknownCatalogEntry(SpectrumError):
    code = "UnknownCatalogEntry"


class BadParameter(SpectrumError):
    code = "BadParameter"


class BudgetExceeded(SpectrumError):
    code = "BudgetExceeded"


class ParseError(SpectrumError):
    code = "ParseError"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{message} ({where})"
        super().__init__(message)
