"""
Reconstruction error metrics on uniform grids.
"""
from typing import Callable, Optional, Tuple

import numpy as np

from ..config.logging_config import get_logger
from ..config.settings import settings
from ..core.exceptions import NumericalError, ValidationError
from ..core.models.error_report import EXACT_SENTINEL, ErrorReport, PointErrors

logger = get_logger(__name__)


def _evaluate(func: Callable, x: np.ndarray, what: str) -> np.ndarray:
    values = np.asarray(func(x), dtype=float)
    bad = ~np.isfinite(values)
    if np.any(bad):
        idx = int(np.flatnonzero(bad)[0])
        raise NumericalError(f"{what} is not finite at x={x[idx]:.6g}")
    return values


def error_grid(
    approx: Callable,
    reference: Callable,
    interval: Tuple[float, float],
    n_points: Optional[int] = None,
    method_label: str = "approx",
    keep_points: bool = True
) -> ErrorReport:
    """
    Compare an approximation with a reference on a uniform closed grid.

    Args:
        approx: Vectorized approximation x -> f_approx(x)
        reference: Vectorized reference x -> f(x)
        interval: Grid interval (a, b)
        n_points: Grid size including endpoints (default from settings)
        method_label: Label stored in the report
        keep_points: Retain per-point data

    Returns:
        Error report; min/max are -inf when every point is exact

    Raises:
        ValidationError: If n_points < 2
        NumericalError: If either map returns non-finite values
    """
    n_points = settings.grid_points if n_points is None else n_points
    if n_points < 2:
        raise ValidationError(f"n_points must be at least 2, got {n_points}")

    a, b = float(interval[0]), float(interval[1])
    x = np.linspace(a, b, n_points)
    fa = _evaluate(approx, x, f"{method_label} approximation")
    fr = _evaluate(reference, x, "reference")

    abs_error = np.abs(fa - fr)
    nonzero = abs_error > 0
    zero_count = int(n_points - np.count_nonzero(nonzero))

    if np.any(nonzero):
        logs = np.log10(abs_error[nonzero])
        min_log, max_log = float(np.min(logs)), float(np.max(logs))
    else:
        min_log = max_log = EXACT_SENTINEL

    logger.debug(
        f"{method_label} on [{a}, {b}] with {n_points} points: "
        f"max_log10={max_log:.4f}, {zero_count} exact points"
    )

    return ErrorReport(
        method_label=method_label,
        interval=(a, b),
        grid_points=n_points,
        min_log10_abs_error=min_log,
        max_log10_abs_error=max_log,
        zero_error_count=zero_count,
        per_point=PointErrors(x=x, approx=fa, reference=fr, abs_error=abs_error) if keep_points else None
    )


def print_summary(report: ErrorReport):
    """Print report summary to console."""
    a, b = report.interval
    print("\n" + "=" * 70)
    print(f"  📊 RECONSTRUCTION ERROR: {report.method_label}")
    print("=" * 70)
    print(f"\n  Interval:             [{a:g}, {b:g}]")
    print(f"  Grid points:          {report.grid_points}")
    print(f"  min log10|error|:     {report.min_log10_abs_error:.6f}")
    print(f"  max log10|error|:     {report.max_log10_abs_error:.6f}")
    print(f"  Exact points:         {report.zero_error_count}")
    if report.exact:
        print("\n  ✅ Exact reconstruction on every grid point")
    print("=" * 70 + "\n")
