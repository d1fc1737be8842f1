import os
from dotenv import load_dotenv

basedir = os.path.abspath(os.path.dirname(__file__))

load_dotenv()


def _env_flag(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


def resolve_worker_count(workers: int | None = None) -> int:
    """Worker count for the parallel backend.

    An explicit argument wins, then the ODE_WORKERS environment variable, then the
    available hardware parallelism.
    """
    if workers is not None:
        return max(1, int(workers))
    env_workers = os.getenv("ODE_WORKERS")
    if env_workers:
        try:
            return max(1, int(env_workers))
        except ValueError:
            # imported here: configs is loaded while the app package initialises
            from app.utils.errors import ConfigError

            raise ConfigError(f"ODE_WORKERS must be an integer, got {env_workers!r}") from None
    return os.cpu_count() or 1


class Config:
    """Base configuration class with settings common to all environments."""

    PROJECT_NAME = os.getenv("PROJECT_NAME", "odeint-bench")

    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_DIR = os.getenv("LOG_DIR", "logs")
    LOG_TO_FILE = _env_flag("LOG_TO_FILE", True)

    # Backends; the worker count is read per algebra by resolve_worker_count
    # Elements per block of a fused loop; sized to stay in L2 for a handful of operands.
    FUSED_BLOCK_SIZE = int(os.getenv("FUSED_BLOCK_SIZE", "4096"))

    # Steppers reject non-finite right-hand sides when set
    VALIDATE_STEPS = _env_flag("VALIDATE_STEPS", True)


class DevelopmentConfig(Config):
    """Configuration for the development environment."""

    DEBUG = True
    LOG_LEVEL = os.getenv("LOG_LEVEL", "DEBUG")


class ProductionConfig(Config):
    """Configuration for benchmark runs on a measurement machine."""

    DEBUG = False


class TestingConfig(Config):
    """Configuration used by the test suite."""

    DEBUG = True
    TESTING = True
    LOG_TO_FILE = False
    LOG_LEVEL = "DEBUG"
