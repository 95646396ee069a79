"""Reading problem files and writing result tables."""

import logging
import sys
from pathlib import Path

import pandas as pd

logger = logging.getLogger(__name__)

STDIN_PATH = "-"


def prepare_output_path(file_path: str) -> Path:
    """Return ``file_path`` as a Path with its parent directories created."""
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def save_csv(df: pd.DataFrame, output_file: str) -> str:
    """
    Save a result table as CSV without the index column.

    Args:
        df: Table to save (e.g. the ``nu``/``H`` frame of a Hilbert function)
        output_file: Destination; missing directories are created

    Returns:
        Path to the saved file
    """
    output_path = prepare_output_path(output_file)
    df.to_csv(output_path, index=False)
    logger.debug(f"💾 {len(df)} rows written to {output_path}")
    return str(output_path)


def read_text_input(path: str) -> str:
    """Read a problem or certificate file; ``-`` reads standard input."""
    if path == STDIN_PATH:
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")
