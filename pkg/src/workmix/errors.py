"""Exception hierarchy shared by every workmix module.

Two broad families matter to callers: configuration/input problems
(:class:`InputError` and subclasses), which the CLI reports as exit code 1,
and computation failures (:class:`ComputationError` and subclasses), which
map to exit code 2.
"""

__all__ = [
    "WorkmixError",
    "InputError",
    "DomainError",
    "ParamError",
    "ParseError",
    "ValidationError",
    "ChartError",
    "ComputationError",
    "RangeError",
    "BracketError",
    "CalibrationError",
    "MonotonicityError",
]


class WorkmixError(Exception):
    """Base class for every error raised by this package."""


class InputError(WorkmixError):
    """Bad arguments, parameters, or configuration supplied by the caller."""


class DomainError(InputError):
    """A scalar argument lies outside the function's domain."""


class ParamError(InputError):
    """A parameter bundle violates its invariants."""


class ParseError(InputError):
    """A configuration document is not syntactically valid."""


class ValidationError(InputError):
    """A configuration document is well-formed but semantically invalid."""


class ChartError(InputError):
    """The requested chart kind cannot render the given model's output."""


class ComputationError(WorkmixError):
    """A computation failed despite valid inputs."""


class RangeError(ComputationError):
    """An iterated state left its admissible range."""


class BracketError(ComputationError):
    """Root bracketing failed: no sign change over the given interval."""


class CalibrationError(ComputationError):
    """Calibration targets imply inadmissible parameters."""


class MonotonicityError(ComputationError):
    """A delegation trace shrank, violating the monotone-growth premise."""
