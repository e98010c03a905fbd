"""Exception hierarchy shared by the library and the command line front end."""


class ProjAtlasError(Exception):
    """Base class for every error raised by this package."""


class InputError(ProjAtlasError):
    """Malformed user input: bad syntax, unknown names, invalid systems."""


class ParseError(InputError):
    """Syntax error in a polynomial or system string.

    ``position`` is the zero-based character offset of the offending token
    and ``token`` its text (empty at end of input).
    """

    def __init__(self, message: str, position: int, token: str = ""):
        super().__init__(f"{message} at position {position}" + (f" near {token!r}" if token else ""))
        self.reason = message
        self.position = position
        self.token = token


class InvalidSystemError(InputError):
    """The pair (X, Y) violates the standing hypotheses on a polynomial system."""


class AnalysisError(ProjAtlasError):
    """An analysis stage could not produce a result for a valid system."""


class MappedToInfinityError(AnalysisError):
    """A chart map was applied to a point on the line it sends to infinity."""

    def __init__(self, line: str):
        super().__init__(f"point lies on the line {line}, which the map sends to infinity")
        self.line = line


class NotAnEquilibriumError(AnalysisError):
    """Classification was requested at a point where the field does not vanish."""


class StepSizeUnderflowError(AnalysisError):
    """The adaptive integrator could not make progress."""

    def __init__(self, chart, point):
        super().__init__(f"step size underflow in chart {chart} at {point}")
        self.chart = chart
        self.point = point
