"""
MirrorEnt - Command-Line Entry Point
Collective decay and entanglement of two atoms near a perfect mirror
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence

import structlog

from commands import COMMAND_MODULES
from config.settings import settings
from core.exceptions import ConfigurationError
from middleware.error_handler import error_handler_middleware
from middleware.run_logger import run_logging_middleware


# ============================================================================
# LOGGING
# ============================================================================
def configure_logging() -> None:
    """Structured logs on stderr; stdout carries command output only"""
    logging.basicConfig(stream=sys.stderr, level=settings.log_level, format="%(message)s")
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.JSONRenderer() if settings.log_format == "json"
            else structlog.dev.ConsoleRenderer()
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


configure_logging()


# ============================================================================
# ARGUMENT PARSING
# ============================================================================
class CommandParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit through the error middleware"""

    def error(self, message: str):
        raise ConfigurationError(f"{message}\n{self.format_usage().strip()}", key="usage")


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="mirrorent",
        description="Collective decay rates, entanglement dynamics and oracle validation "
        "for two atoms in front of a perfect mirror.",
    )
    parser.add_argument("--version", action="version", version=f"{settings.app_name} {settings.app_version}")
    subparsers = parser.add_subparsers(dest="command", metavar="{rates,sweep,dynamics,validate}")
    subparsers.required = True
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def dispatch(argv: Sequence[str]) -> int:
    """Parse argv and run the selected subcommand"""
    args = build_parser().parse_args(list(argv))
    return args.handler(args)


# ============================================================================
# MAIN
# ============================================================================
def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    return run_logging_middleware(argv, lambda a: error_handler_middleware(a, dispatch))


if __name__ == "__main__":
    sys.exit(main())
