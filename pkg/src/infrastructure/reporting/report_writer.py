"""
CSV and JSON serialization of error reports.
"""
import csv
import io
import json
from pathlib import Path
from typing import Iterable, List, Sequence

from ...config.logging_config import get_logger
from ...core.exceptions import ReportError, ValidationError
from ...core.models.error_report import ErrorReport

logger = get_logger(__name__)

FORMATS = ('csv', 'json')
CSV_HEADER = ['x', 'approx', 'reference', 'abs_error']


def _fmt(value: float) -> str:
    return repr(float(value))


def emit_report(report: ErrorReport, fmt: str = 'csv') -> bytes:
    """
    Serialize a report.

    csv: header x,approx,reference,abs_error, one row per retained grid point,
    then `# min_log10=<v>` and `# max_log10=<v>` comment lines.
    json: summary object, with a `points` array when per-point data is retained.

    Args:
        report: Error report
        fmt: 'csv' or 'json'

    Returns:
        UTF-8 encoded document
    """
    if fmt not in FORMATS:
        raise ValidationError(f"unknown report format '{fmt}', expected one of {FORMATS}")

    if fmt == 'json':
        return emit_json(report.to_dict(include_points=True))

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    points = report.per_point
    if points is not None:
        for row in zip(points.x, points.approx, points.reference, points.abs_error):
            writer.writerow([_fmt(v) for v in row])
    buffer.write(f"# min_log10={_fmt(report.min_log10_abs_error)}\n")
    buffer.write(f"# max_log10={_fmt(report.max_log10_abs_error)}\n")
    return buffer.getvalue().encode('utf-8')


def emit_json(data: dict) -> bytes:
    """Indented JSON document (non-finite floats as -Infinity/Infinity)."""
    return (json.dumps(data, indent=2) + "\n").encode('utf-8')


def write_bytes(path: Path, payload: bytes):
    """Write a payload, creating parent directories."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload)
    except OSError as e:
        raise ReportError(f"cannot write {path}: {e}") from e
    logger.info(f"Saved {path}")


def write_report(report: ErrorReport, path: Path, fmt: str = 'csv'):
    """Serialize a report to a file."""
    write_bytes(path, emit_report(report, fmt))


def emit_rows(header: Sequence[str], rows: Iterable[Sequence]) -> bytes:
    """Plain CSV table (tables and sweeps)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue().encode('utf-8')


def format_table(header: Sequence[str], rows: List[Sequence], float_format: str = "{:.6g}") -> str:
    """Aligned text table for the console."""
    cells = [
        [float_format.format(v) if isinstance(v, float) else str(v) for v in row]
        for row in rows
    ]
    widths = [
        max([len(str(h))] + [len(row[i]) for row in cells])
        for i, h in enumerate(header)
    ]
    lines = ["  ".join(str(h).rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)
