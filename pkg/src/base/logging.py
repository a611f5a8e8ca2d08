"""Structured logging for heunkit.

Records go to stderr (or a file), never stdout: stdout carries the CLI
summary and report output.

Usage:
    from src.base import get_logger

    logger = get_logger(__name__)
    logger.info("Suite finished", suite="gauss", failed=0)
"""

import json
import os
import sys
from datetime import datetime, timezone
from typing import IO, Any

from loguru import logger

HUMAN_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}:{line}</cyan> | <level>{message}</level>"
)
PLAIN_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{line} | {message} | {extra}"

PROMOTED_FIELDS = ("suite", "rule", "index", "operation", "duration_ms", "error")
"""Extra keys lifted to the top level of a JSON line."""


class JSONSink:
    """Loguru sink writing one JSON object per record.

    Args:
        file_path: Append to this file; stderr when None.
    """

    def __init__(self, file_path: str | None = None) -> None:
        self.file_path = file_path
        self._stream: IO[str] = open(file_path, "a", encoding="utf-8") if file_path else sys.stderr  # noqa: SIM115

    def write(self, message: Any) -> None:
        self._stream.write(format_record(message.record) + "\n")
        self._stream.flush()

    def stop(self) -> None:
        """Called by loguru when the sink is removed."""
        if self.file_path:
            self._stream.close()


def format_record(record: Any) -> str:
    """Render a loguru record as a JSON line.

    Returns:
        JSON with timestamp, level, logger, message and source location,
        the promoted extra fields, and the remaining extras under "extra".
    """
    extra = dict(record["extra"])
    data: dict[str, Any] = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "level": record["level"].name,
        "logger": extra.pop("name", record["name"]),
        "message": record["message"],
        "module": record["module"],
        "function": record["function"],
        "line": record["line"],
    }
    data.update({key: extra.pop(key) for key in PROMOTED_FIELDS if key in extra})
    if extra:
        data["extra"] = extra

    exc = record["exception"]
    if exc is not None:
        data["exception"] = {
            "type": exc.type.__name__ if exc.type else None,
            "value": str(exc.value) if exc.value else None,
        }
    return json.dumps(data, ensure_ascii=False, default=str)


def setup_logging(
    level: str = "WARNING",
    json_output: bool = False,
    log_file: str | None = None,
    enable_colors: bool = False,
) -> None:
    """Replace every loguru sink with heunkit's.

    Args:
        level: Minimum level name.
        json_output: JSON lines instead of the human format.
        log_file: Write there instead of stderr (JSON), or in addition to it.
        enable_colors: Colorize the human format.
    """
    logger.remove()
    if json_output:
        logger.add(JSONSink(log_file), format="{message}", level=level)
    else:
        logger.add(sys.stderr, format=HUMAN_FORMAT, level=level, colorize=enable_colors)
        if log_file:
            logger.add(log_file, format=PLAIN_FORMAT, level=level, encoding="utf-8")
    logger.debug("Logging configured", level=level, json_output=json_output)


def get_logger(name: str | None = None) -> Any:
    """Logger bound to ``name``, which JSON lines report as "logger".

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.debug("Generated coefficients", n_max=64)
    """
    return logger.bind(name=name) if name else logger


_configured_from_env = False


def _configure_from_env() -> None:
    """Apply HEUNKIT_LOG_LEVEL and HEUNKIT_LOG_JSON once, at import."""
    global _configured_from_env
    if _configured_from_env:
        return
    setup_logging(
        level=os.environ.get("HEUNKIT_LOG_LEVEL", "WARNING").upper(),
        json_output=os.environ.get("HEUNKIT_LOG_JSON", "false").lower() in ("1", "true", "yes"),
    )
    _configured_from_env = True


_configure_from_env()
