"""
Exception types for cojump.

This module defines all exception types used across cojump so that the
library and the command line report errors the same way.
"""

from typing import Optional, Dict, Any, Type


class CojumpError(Exception):
    """
    Base exception class for all cojump errors.

    All exceptions raised by cojump inherit from this class to allow for
    consistent error handling.
    """

    def __init__(self, message: str, component: Optional[str] = None,
                 original_exception: Optional[Exception] = None,
                 details: Optional[Dict[str, Any]] = None):
        """
        Initialize the base exception class.

        Args:
            message: The error message
            component: The component (core, estimators, simulate, ...) that raised the error
            original_exception: The original exception that was caught
            details: Additional details about the error
        """
        self.component = component
        self.original_exception = original_exception
        self.details = details or {}

        full_message = message
        if component:
            full_message = f"[{component}] {full_message}"

        super().__init__(full_message)


class InvalidParameterError(CojumpError):
    """
    Raised when a parameter value is outside its admissible range.

    Args:
        parameter: The parameter name that caused the error
        value: The invalid parameter value
    """

    def __init__(self, parameter: str, value: Any, message: Optional[str] = None,
                 component: Optional[str] = None, original_exception: Optional[Exception] = None,
                 details: Optional[Dict[str, Any]] = None):
        self.parameter = parameter
        self.value = value

        if message is None:
            message = f"Invalid value '{value}' for parameter '{parameter}'"

        super().__init__(message, component, original_exception, details)


class ThresholdAdmissibilityError(InvalidParameterError):
    """
    Raised when a threshold r_h = c h^beta is not admissible.

    Admissibility requires r_h -> 0 and h log(1/h) / r_h -> 0 as h -> 0, which within
    the power family holds exactly when c > 0 and 0 < beta < 1.
    """
    pass


class GridError(CojumpError):
    """
    Raised when a time grid or a sampled path is malformed.

    Examples are non increasing timestamps, a grid not starting at 0, or
    values whose length differs from the grid length.
    """
    pass


class GridMismatchError(GridError):
    """
    Raised when two grids that must coincide do not.

    Args:
        timestamp: The first timestamp at which the grids differ, if any
    """

    def __init__(self, message: str, timestamp: Optional[float] = None,
                 component: Optional[str] = None, original_exception: Optional[Exception] = None,
                 details: Optional[Dict[str, Any]] = None):
        self.timestamp = timestamp
        if timestamp is not None:
            message = f"{message} (first mismatching timestamp: {timestamp!r})"
        super().__init__(message, component, original_exception, details)


class DataParseError(CojumpError):
    """
    Raised when an input file cannot be read or parsed.

    Args:
        file_path: Path to the file that caused the error
    """

    def __init__(self, message: str, file_path: Optional[str] = None,
                 component: Optional[str] = None, original_exception: Optional[Exception] = None,
                 details: Optional[Dict[str, Any]] = None):
        super().__init__(message, component, original_exception, details)
        self.file_path = file_path
        if file_path:
            self.details["file_path"] = file_path


class ConfigValidationError(CojumpError):
    """
    Raised when a model or experiment configuration is invalid.

    ``details["fields"]`` maps every offending field to its error message.
    """
    pass


class UnsupportedModelError(CojumpError):
    """
    Raised when a simulation model name is unknown.
    """
    pass


class DegenerateStatisticError(CojumpError):
    """
    Raised when a statistic is undefined on the given sample.

    Typical cases are a standardized error with a zero variance estimate
    or a correlation with a zero integrated variance.
    """
    pass


class InsufficientDataError(CojumpError):
    """
    Raised when an operation needs more observations or paths than given.
    """
    pass


# Exit codes of the command line front end
EXIT_SUCCESS = 0
EXIT_PARSE_ERROR = 3
EXIT_VALIDATION_ERROR = 4
EXIT_DEGENERATE = 5

# Mapping of exception types to exit codes, most specific first
EXIT_CODE_MAPPING: Dict[Type[CojumpError], int] = {
    DataParseError: EXIT_PARSE_ERROR,
    DegenerateStatisticError: EXIT_DEGENERATE,
    InsufficientDataError: EXIT_VALIDATION_ERROR,
    ConfigValidationError: EXIT_VALIDATION_ERROR,
    InvalidParameterError: EXIT_VALIDATION_ERROR,
    GridError: EXIT_VALIDATION_ERROR,
    UnsupportedModelError: EXIT_VALIDATION_ERROR,
}


def exit_code_for(error: Exception) -> int:
    """
    Map an exception to a command line exit code.

    Args:
        error: The exception raised while running a command

    Returns:
        The exit code registered for the most specific matching class,
        or the validation code for any other cojump error
    """
    for error_class, code in EXIT_CODE_MAPPING.items():
        if isinstance(error, error_class):
            return code
    return EXIT_VALIDATION_ERROR
