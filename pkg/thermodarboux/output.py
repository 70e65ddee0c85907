"""Tabular output: CSV with round-trip-exact floats and JSON documents."""

import csv
import json
import logging
import math
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, TextIO

logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "THERMODARBOUX_OUTPUT_DIR"
SINGULAR = "singular"


@dataclass
class Table:
    """Header plus rows emitted by one command.

    Attributes:
        command: CLI command that produced the table
        columns: Column names, in order
        rows: Row values; floats, strings or the SINGULAR marker
        metadata: Extra top-level JSON fields (seed, resistance kind)
    """
    command: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        data: Dict[str, Any] = {"command": self.command}
        data.update(self.metadata)
        data["columns"] = list(self.columns)
        data["rows"] = [list(row) for row in self.rows]
        return data


def format_value(value: Any) -> str:
    """Render one CSV cell. Floats use 17 significant digits."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if value == 0.0:
            value = 0.0  # drops the sign of -0.0
        return f"{value:.17g}"
    return str(value)


def json_safe(value: Any) -> Any:
    """Replace non-finite floats by the strings 'inf', '-inf' and 'nan'."""
    if isinstance(value, dict):
        return {key: json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    if isinstance(value, float):
        if math.isfinite(value):
            return 0.0 if value == 0.0 else value
        return format_value(value)
    return value


def write_csv(columns: List[str], rows: List[List[Any]], stream: TextIO) -> None:
    """Write a header and rows as CSV ('.' decimal, ',' separator)."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(value) for value in row])


def write_json(document: Dict[str, Any], stream: TextIO) -> None:
    """Write a JSON document with non-finite floats as strings."""
    stream.write(json.dumps(json_safe(document), indent=2, allow_nan=False))
    stream.write("\n")


def resolve_output_path(path: Optional[str]) -> Optional[Path]:
    """Resolve an --output path against THERMODARBOUX_OUTPUT_DIR.

    Returns:
        Absolute or relative path, or None for standard output
    """
    if not path or path == "-":
        return None
    resolved = Path(path)
    output_dir = os.environ.get(OUTPUT_DIR_ENV)
    if output_dir and not resolved.is_absolute():
        resolved = Path(output_dir) / resolved
    return resolved


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """Open the output destination (standard output when path is None or '-')."""
    resolved = resolve_output_path(path)
    if resolved is None:
        yield sys.stdout
        return
    resolved.parent.mkdir(parents=True, exist_ok=True)
    logger.info(f"Writing output to {resolved}")
    with open(resolved, "w", newline="") as stream:
        yield stream


def emit_table(table: Table, output_format: str, path: Optional[str] = None) -> None:
    """Write a table as CSV or JSON."""
    with open_output(path) as stream:
        if output_format == "json":
            write_json(table.to_dict(), stream)
        else:
            write_csv(table.columns, table.rows, stream)


def emit_document(document: Dict[str, Any], path: Optional[str] = None) -> None:
    """Write a JSON document."""
    with open_output(path) as stream:
        write_json(document, stream)
