import contextvars
import logging
import logging.handlers
import os
import sys
from contextlib import contextmanager

from config import active_config
from dotenv import load_dotenv

load_dotenv()

proj_name = active_config().PROJECT_NAME

# system/backend/N of the benchmark run currently executing in this context
_run_context: contextvars.ContextVar[str] = contextvars.ContextVar("run_context", default="-")


class RunFormatter(logging.Formatter):
    """Custom formatter that includes the active run context in log messages"""

    def format(self, record):
        record.run = get_run_context()
        return super().format(record)


def get_run_context() -> str:
    """Get the run context label of the current execution context"""
    return _run_context.get()


@contextmanager
def run_context(system: str, backend: str, n: int):
    """Tag every log record emitted inside the block with system/backend/N."""
    token = _run_context.set(f"{system}/{backend}/{n}")
    try:
        yield
    finally:
        _run_context.reset(token)


def setup_logger(
    name: str = proj_name,
    log_level: int | str | None = None,
    log_dir: str | None = None,
) -> logging.Logger:
    """Setup logger with midnight rotation and run-context tracking

    Args:
        name: Logger name
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR); defaults to the active config
        log_dir: Directory to store log files; defaults to the active config

    Returns:
        Configured logger instance
    """
    cfg = active_config()
    log_level = log_level or cfg.LOG_LEVEL
    log_dir = log_dir or cfg.LOG_DIR

    logger = logging.getLogger(name)
    logger.setLevel(log_level)
    logger.propagate = False

    # Remove existing handlers to avoid duplicates
    if logger.handlers:
        logger.handlers.clear()

    formatter = RunFormatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(run)s - %(filename)s:%(lineno)d - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    if cfg.LOG_TO_FILE:
        log_dir = os.path.join(os.getcwd(), log_dir)
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.handlers.TimedRotatingFileHandler(
            os.path.join(log_dir, "odebench.log"),
            when="midnight",
            interval=1,
            backupCount=30,
        )
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    # stdout carries CSV output, so the console handler writes to stderr
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel(logging.WARNING)
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    return logger


def get_logger(name: str = proj_name) -> logging.Logger:
    """Get logger instance - creates it if it doesn't exist"""
    logger = logging.getLogger(name)
    if not logger.handlers:
        logger = setup_logger(name)
    return logger


# Global logger instance
logger = get_logger()
