"""
Run Logging Middleware
Logs every command invocation with timing and a run ID
"""
import time
import uuid
from typing import Callable, Sequence

import structlog

from config.settings import settings

logger = structlog.get_logger(__name__)


def run_logging_middleware(argv: Sequence[str], call_next: Callable[[Sequence[str]], int]) -> int:
    """
    Log the command, its exit status and wall-clock duration.
    """
    # Generate run ID
    run_id = str(uuid.uuid4())
    structlog.contextvars.bind_contextvars(run_id=run_id)

    start_time = time.time()
    command = argv[0] if argv else None

    logger.info(
        "command_received",
        run_id=run_id,
        command=command,
        args=list(argv[1:]),
        environment=settings.environment,
        version=settings.app_version,
    )

    try:
        exit_code = call_next(argv)
    finally:
        structlog.contextvars.unbind_contextvars("run_id")

    duration = time.time() - start_time
    logger.info(
        "command_completed",
        run_id=run_id,
        command=command,
        exit_code=exit_code,
        duration_ms=int(duration * 1000),
    )
    return exit_code
