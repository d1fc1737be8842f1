import sys
from typing import Any, TextIO

from app.utils.logger import logger


def cliResponse(
    status: str,
    message: str,
    payload: Any = None,
    exit_code: int = 0,
    stream: TextIO | None = None,
) -> int:
    """Report the outcome of a command on stderr and hand back its exit code."""
    stream = stream or sys.stderr
    line = f"{status}: {message}"
    if payload:
        details = ", ".join(f"{key}={value}" for key, value in payload.items())
        line = f"{line} ({details})"
    print(line, file=stream)

    if exit_code == 0:
        logger.info(line)
    else:
        logger.error(line)
    return exit_code
