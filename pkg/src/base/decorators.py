"""Utility decorators.

- measure_time: log the wall time of a call
"""

import functools
import time
from collections.abc import Callable
from typing import ParamSpec, TypeVar

from src.base.logging import get_logger

logger = get_logger(__name__)

P = ParamSpec("P")
R = TypeVar("R")


def measure_time(
    operation_name: str | None = None,
    log_level: str = "DEBUG",
) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Decorator that logs how long a function took.

    Args:
        operation_name: Name used in the log line (defaults to the function name).
        log_level: Log level (DEBUG, INFO, WARNING).

    Example:
        >>> @measure_time("suite:gauss", log_level="INFO")
        ... def run() -> int:
        ...     return 0
    """

    def decorator(func: Callable[P, R]) -> Callable[P, R]:
        name = operation_name or func.__name__

        @functools.wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            start_time = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                elapsed_ms = round((time.perf_counter() - start_time) * 1000, 2)
                logger.bind(operation=name, duration_ms=elapsed_ms).log(
                    log_level.upper(), f"{name} completed in {elapsed_ms}ms"
                )

        return wrapper

    return decorator
