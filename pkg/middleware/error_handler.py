"""
Error Handler Middleware
Maps command failures to exit statuses and structured error logs
"""
import traceback
from typing import Callable, Sequence

import structlog
from pydantic import ValidationError

from config.settings import settings
from core.exceptions import ConfigurationError, MirrorEntError
from core.units import config_error_from

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1

CommandHandler = Callable[[Sequence[str]], int]


def _log_failure(event: str, argv: Sequence[str], exc: BaseException, exit_code: int) -> None:
    details = {}
    if settings.show_error_details:
        details["traceback"] = traceback.format_exc()
    logger.error(
        event,
        command=argv[0] if argv else None,
        error_type=type(exc).__name__,
        error=str(exc),
        exit_code=exit_code,
        **details,
    )


def error_handler_middleware(argv: Sequence[str], call_next: CommandHandler) -> int:
    """
    Global error handler for one command invocation.

    Catches every exception raised while parsing or running the command
    and turns it into an exit status: the exit_code of MirrorEntError
    subclasses, 1 for invalid input and anything unexpected.
    """
    try:
        return call_next(argv)

    except ValidationError as exc:
        error = config_error_from(exc)
        _log_failure("command_failed", argv, error, error.exit_code)
        return error.exit_code

    except MirrorEntError as exc:
        _log_failure("command_failed", argv, exc, exc.exit_code)
        return exc.exit_code

    except OSError as exc:
        error = ConfigurationError(str(exc), key=getattr(exc, "filename", None))
        _log_failure("command_failed", argv, error, error.exit_code)
        return error.exit_code

    except Exception as exc:
        logger.exception(
            "unhandled_exception_in_command",
            command=argv[0] if argv else None,
            error=str(exc),
            traceback=traceback.format_exc() if settings.show_error_details else None,
        )
        return EXIT_FAILURE
