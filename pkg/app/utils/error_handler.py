import functools
import traceback

from app.utils.cli_response import cliResponse
from app.utils.errors import (
    ConfigError,
    CsvFormatError,
    IntegrationError,
    OdeBenchError,
    UsageError,
)
from app.utils.logger import logger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


def handle_command_errors(command):
    """Map exceptions raised by a command to a diagnostic line and an exit code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs) -> int:
        try:
            result = command(*args, **kwargs)
            return EXIT_OK if result is None else result
        except UsageError as e:
            if e.usage:
                print(e.usage.rstrip())
            return cliResponse(status="error", message=str(e), exit_code=EXIT_USAGE)
        except ConfigError as e:
            return cliResponse(
                status="error",
                message="invalid configuration",
                payload={"error_msg": str(e)},
                exit_code=EXIT_USAGE,
            )
        except IntegrationError as e:
            return cliResponse(
                status="error",
                message="integration aborted",
                payload={"step": e.step_index, "t": e.t, "error_msg": str(e)},
                exit_code=EXIT_RUNTIME,
            )
        except CsvFormatError as e:
            return cliResponse(
                status="error",
                message="malformed CSV",
                payload={"error_msg": str(e)},
                exit_code=EXIT_RUNTIME,
            )
        except (OdeBenchError, MemoryError, OSError) as e:
            logger.debug(traceback.format_exc())
            return cliResponse(
                status="error",
                message="command failed",
                payload={"error_msg": str(e)},
                exit_code=EXIT_RUNTIME,
            )

    return wrapper
