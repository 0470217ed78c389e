"""
Middleware package
Wrappers applied around every command invocation
"""
from middleware.error_handler import error_handler_middleware
from middleware.run_logger import run_logging_middleware

__all__ = [
    "error_handler_middleware",
    "run_logging_middleware",
]
