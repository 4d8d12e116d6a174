"""Exception types shared across the package."""


class NearcolorError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(NearcolorError, ValueError):
    """A structural parameter is outside its documented range."""


class InvalidColoringError(NearcolorError, ValueError):
    """A coloring does not structurally match the graph it is applied to."""


class InfeasibleError(NearcolorError):
    """No valid coloring exists for the requested parameters."""


class SizeLimitError(NearcolorError):
    """The instance exceeds a configured exact-search limit."""


class GraphFormatError(NearcolorError, ValueError):
    """A graph file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
