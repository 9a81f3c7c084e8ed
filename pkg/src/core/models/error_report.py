"""
Reconstruction error report model.
"""
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from ..exceptions import ValidationError

# min/max sentinel when every grid point is reproduced exactly
EXACT_SENTINEL = float('-inf')


@dataclass
class PointErrors:
    """Per-point grid data (x, approximation, reference, |error|)."""
    x: np.ndarray
    approx: np.ndarray
    reference: np.ndarray
    abs_error: np.ndarray

    def __post_init__(self):
        n = len(self.x)
        for name in ('approx', 'reference', 'abs_error'):
            if len(getattr(self, name)) != n:
                raise ValidationError(f"{name} length does not match grid length {n}")
        if np.any(self.abs_error < 0):
            raise ValidationError("abs_error entries must be non-negative")

    def __len__(self) -> int:
        return len(self.x)


@dataclass
class ErrorReport:
    """
    Gridded absolute-error statistics of a reconstruction.

    Attributes:
        method_label: Method name (WAi-j, COS-N, BROMWICH)
        interval: Evaluation interval (a, b)
        grid_points: Number of uniform grid points (endpoints included)
        min_log10_abs_error: min log10|error| over points with nonzero error
        max_log10_abs_error: max log10|error| over points with nonzero error
        zero_error_count: Points reproduced exactly (excluded from the logs)
        per_point: Optional per-point data
        metadata: Additional information
    """
    method_label: str
    interval: Tuple[float, float]
    grid_points: int
    min_log10_abs_error: float
    max_log10_abs_error: float
    zero_error_count: int = 0
    per_point: Optional[PointErrors] = None
    metadata: Dict = field(default_factory=dict)

    def __post_init__(self):
        """Validate report."""
        if self.min_log10_abs_error > self.max_log10_abs_error:
            raise ValidationError(
                f"min log error {self.min_log10_abs_error} exceeds max {self.max_log10_abs_error}"
            )
        if self.grid_points < 2:
            raise ValidationError(f"grid_points must be at least 2, got {self.grid_points}")

    @property
    def exact(self) -> bool:
        """True when every grid point has zero error."""
        return self.zero_error_count == self.grid_points

    def to_dict(self, include_points: bool = True) -> dict:
        """Convert report to dictionary (key order is part of the JSON format)."""
        data = {
            'method_label': self.method_label,
            'interval': [float(self.interval[0]), float(self.interval[1])],
            'grid_points': self.grid_points,
            'min_log10_abs_error': self.min_log10_abs_error,
            'max_log10_abs_error': self.max_log10_abs_error,
            'zero_error_count': self.zero_error_count,
            'exact': self.exact
        }
        if include_points and self.per_point is not None:
            data['points'] = [
                {'x': float(x), 'approx': float(fa), 'reference': float(fr), 'abs_error': float(e)}
                for x, fa, fr, e in zip(
                    self.per_point.x, self.per_point.approx,
                    self.per_point.reference, self.per_point.abs_error
                )
            ]
        return data

    def summary_line(self) -> str:
        """`<label> min_log10=<v> max_log10=<v>`."""
        return (
            f"{self.method_label} min_log10={self.min_log10_abs_error:.6f} "
            f"max_log10={self.max_log10_abs_error:.6f}"
        )
