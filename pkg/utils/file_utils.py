"""
File Utilities
Deterministic CSV and JSON writers for command output
"""
import csv
import hashlib
import io
import json
import sys
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import structlog

from core.exceptions import ConfigurationError

logger = structlog.get_logger(__name__)

NUMBER_FORMAT = ".17g"


def calculate_file_hash(content: str) -> str:
    """
    Calculate SHA256 hash of file content.

    Args:
        content: File content string

    Returns:
        str: SHA256 hash (hex)
    """
    return hashlib.sha256(content.encode("utf-8")).hexdigest()


def format_number(value: Any) -> str:
    """17 significant digits for floats; other fields pass through str()"""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return getattr(value, "value", str(value))
    return format(float(value), NUMBER_FORMAT)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Render rows as CSV text.

    Args:
        header: Column names
        rows: Row values; numbers are written with 17 significant digits

    Returns:
        str: CSV with LF line endings
    """
    buffer = io.StringIO(newline="")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(value) for value in row])
    return buffer.getvalue()


def render_json(payload: Any) -> str:
    """Indented JSON with a trailing newline"""
    return json.dumps(payload, indent=2) + "\n"


def write_output(content: str, path: Optional[Union[str, Path]] = None) -> str:
    """
    Write text to `path`, or to stdout when no path is given.

    Args:
        content: Text to write
        path: Destination file

    Returns:
        str: SHA256 of the written content

    Raises:
        ConfigurationError: Destination cannot be written
    """
    digest = calculate_file_hash(content)
    if path is None:
        sys.stdout.write(content)
        sys.stdout.flush()
        return digest

    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(content)
    except OSError as exc:
        raise ConfigurationError(f"cannot write {path}: {exc.strerror}", key="out") from exc

    logger.info("output_written", path=str(path), bytes=len(content.encode("utf-8")), sha256=digest)
    return digest
