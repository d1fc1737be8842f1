"""Exception hierarchy shared by every layer of the package."""


class OdeBenchError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(OdeBenchError, ValueError):
    """Aligned operands do not have matching lengths or shapes."""


class StateLayoutError(OdeBenchError, ValueError):
    """A state is not a C-contiguous float64 array."""


class NonFiniteStateError(OdeBenchError, FloatingPointError):
    """A NaN or infinity was found where finite values are required."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class IntegrationError(OdeBenchError):
    """A step failed inside an integration driver."""

    def __init__(self, message: str, step_index: int, t: float):
        super().__init__(message)
        self.step_index = step_index
        self.t = t


class AliasingError(OdeBenchError, ValueError):
    """A fused statement target is also read by the same group."""


class SparseFormatError(OdeBenchError, ValueError):
    """Sparse matrix arrays violate the storage format invariants."""


class ConfigError(OdeBenchError, ValueError):
    """Invalid benchmark or simulation configuration."""


class UsageError(OdeBenchError):
    """Invalid command line."""

    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class CsvFormatError(OdeBenchError, ValueError):
    """Malformed benchmark CSV input."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
