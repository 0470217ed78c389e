"""
MirrorEnt Exceptions
Error hierarchy shared by the library and the command-line front end.
Each family carries the exit status the CLI reports for it.
"""


class MirrorEntError(Exception):
    """Base class for all library errors"""

    exit_code: int = 1


class ConfigurationError(MirrorEntError, ValueError):
    """Invalid configuration, flag, or out-of-range physical input"""

    exit_code = 1

    def __init__(self, message: str, key: str | None = None):
        self.key = key
        super().__init__(f"{key}: {message}" if key else message)


class InvalidStateError(ConfigurationError):
    """Density matrix or amplitudes violating the state invariants"""


class OutOfDomainError(ConfigurationError):
    """Input outside the range a numerical oracle is defined on"""


class ValidationFailure(MirrorEntError):
    """Closed forms and oracles disagree beyond tolerance"""

    exit_code = 2


class ConvergenceError(MirrorEntError):
    """A numerical procedure failed to reach its tolerance"""

    exit_code = 3


class TailBoundError(ConvergenceError):
    """Truncated integration tail exceeds the absolute tolerance"""


class QuadratureOrderError(ConvergenceError):
    """Doubling the quadrature order changed the result beyond tolerance"""
