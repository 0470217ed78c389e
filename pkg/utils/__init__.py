"""
Utilities package
Helper functions and shared utilities
"""
from utils.file_utils import calculate_file_hash, format_number, render_csv, render_json, write_output

__all__ = [
    "calculate_file_hash",
    "format_number",
    "render_csv",
    "render_json",
    "write_output",
]
