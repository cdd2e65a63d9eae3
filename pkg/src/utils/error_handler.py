import functools
import traceback
from typing import Any, Callable, Optional, Type, TypeVar, cast

from .logger import logger

# Type variables for function signatures
R = TypeVar('R')


class TruncationError(Exception):
    """Base class for all errors raised by the toolkit."""

    def __init__(self, message: str, original_error: Optional[Exception] = None):
        """
        Initialize a toolkit error.

        Args:
            message: Error message.
            original_error: The original exception that caused this error.
        """
        self.original_error = original_error
        self.message = message
        super().__init__(self.message)


class DomainError(TruncationError):
    """Error raised when an input violates an operation's precondition."""
    pass


class DegenerateInputError(DomainError):
    """Error raised when a construction has no well-defined result for its input."""
    pass


class StateParseError(DomainError):
    """Error raised when a persisted state cannot be parsed."""

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        original_error: Optional[Exception] = None
    ):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message, original_error)


class NumericFailureError(TruncationError):
    """Error raised when a linear-algebra kernel fails to converge."""
    pass


class ConditioningError(TruncationError):
    """Error raised when computed roots drift off the unit circle."""

    def __init__(self, message: str, drift: float, original_error: Optional[Exception] = None):
        self.drift = drift
        super().__init__(f"{message} (max |1-|root|| = {drift:.3e})", original_error)


class ConvergenceError(TruncationError):
    """Error raised in strict mode when the distance solver did not stabilize."""
    pass


def handle_error(
    error_type: Type[TruncationError],
    message: str,
    original_error: Optional[Exception] = None,
    log_traceback: bool = True,
    raise_error: bool = True
) -> None:
    """
    Handle an error in a standardized way.

    Args:
        error_type: The type of TruncationError to create.
        message: Error message.
        original_error: The original exception that caused this error.
        log_traceback: Whether to log the traceback.
        raise_error: Whether to raise the error after logging.

    Raises:
        TruncationError: The wrapped error if raise_error is True.
    """
    error = error_type(message, original_error)

    if log_traceback and original_error:
        logger.error(
            f"{message} - Original error: {str(original_error)}\n"
            f"{''.join(traceback.format_exception(type(original_error), original_error, original_error.__traceback__))}"
        )
    else:
        logger.error(message)

    if raise_error:
        raise error from original_error


def error_handler(
    error_type: Type[TruncationError],
    message: str,
    log_traceback: bool = True,
    raise_error: bool = True
) -> Callable[[Callable[..., R]], Callable[..., R]]:
    """
    Decorator that converts foreign exceptions into the toolkit hierarchy.

    Errors that already are ``TruncationError`` instances pass through untouched,
    so callers can rely on the specific subclass.

    Args:
        error_type: The type of TruncationError to create.
        message: Error message template. Can include {args} and {kwargs}.
        log_traceback: Whether to log the traceback.
        raise_error: Whether to raise the error after logging.

    Returns:
        Decorated function that handles errors.
    """
    def decorator(func: Callable[..., R]) -> Callable[..., R]:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> R:
            try:
                return func(*args, **kwargs)
            except TruncationError:
                raise
            except Exception as e:
                try:
                    formatted_message = message.format(args=args, kwargs=kwargs)
                except (KeyError, ValueError, IndexError):
                    formatted_message = message

                full_message = f"Error in {func.__name__}: {formatted_message}"

                handle_error(
                    error_type,
                    full_message,
                    original_error=e,
                    log_traceback=log_traceback,
                    raise_error=raise_error
                )

                # Only reached if raise_error is False
                return cast(R, None)

        return wrapper

    return decorator
