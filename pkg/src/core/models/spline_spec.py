"""
Spline approximation space and wavelet expansion models.
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from ..exceptions import ValidationError

MAX_ORDER = 8
MAX_SCALE = 16


@dataclass(frozen=True)
class SplineSpec:
    """
    Identifies an approximation space of cardinal B-spline scaling functions.

    Attributes:
        order: B-spline order j (N_j has support [0, j+1])
        scale: Scale m (translates k = 0 ... (j+1)(2^m - 1))
        interval: Approximation interval (a, b)
    """
    order: int
    scale: int
    interval: Tuple[float, float]

    def __post_init__(self):
        """Validate spec."""
        if not 0 <= self.order <= MAX_ORDER:
            raise ValidationError(f"order must be between 0 and {MAX_ORDER}, got {self.order}")

        if not 1 <= self.scale <= MAX_SCALE:
            raise ValidationError(f"scale must be between 1 and {MAX_SCALE}, got {self.scale}")

        a, b = self.interval
        if not (np.isfinite(a) and np.isfinite(b)) or a >= b:
            raise ValidationError(f"interval must satisfy a < b, got ({a}, {b})")

    @property
    def a(self) -> float:
        return float(self.interval[0])

    @property
    def b(self) -> float:
        return float(self.interval[1])

    @property
    def length(self) -> float:
        return self.b - self.a

    def coefficient_count(self) -> int:
        """Number of translates (j+1)(2^m - 1) + 1."""
        return (self.order + 1) * (2 ** self.scale - 1) + 1

    def max_index(self) -> int:
        """Largest translation index k."""
        return self.coefficient_count() - 1

    def default_panels(self) -> int:
        """Trapezoid panel count M = (j+1) 2^m."""
        return (self.order + 1) * 2 ** self.scale

    def frequency_scale(self) -> float:
        """C = 2^m (j+1) / (b - a), the factor mapping i log z to frequencies."""
        return 2 ** self.scale * (self.order + 1) / self.length

    def to_unit(self, x):
        """Map x in [a, b] to y = (j+1)(x - a)/(b - a) in [0, j+1]."""
        return (self.order + 1) * (np.asarray(x, dtype=float) - self.a) / self.length

    def label(self) -> str:
        """Method label WAi-j (order i at scale j)."""
        return f"WA{self.order}-{self.scale}"

    def to_dict(self) -> dict:
        """Convert spec to dictionary representation."""
        return {
            'order': self.order,
            'scale': self.scale,
            'interval': [self.a, self.b],
            'coefficient_count': self.coefficient_count()
        }


@dataclass
class WaveletExpansion:
    """
    Recovered coefficient vector c_{m,k}^j with its approximation space.

    Attributes:
        spec: Approximation space
        coeffs: Coefficients, one per translate
        metadata: Free-form run information (radius, panels, convention notes)
    """
    spec: SplineSpec
    coeffs: np.ndarray
    metadata: Dict = field(default_factory=dict)

    def __post_init__(self):
        """Validate coefficients."""
        self.coeffs = np.asarray(self.coeffs, dtype=float)

        if self.coeffs.ndim != 1 or len(self.coeffs) != self.spec.coefficient_count():
            raise ValidationError(
                f"Expected {self.spec.coefficient_count()} coefficients for "
                f"{self.spec.label()}, got shape {self.coeffs.shape}"
            )

        if not np.all(np.isfinite(self.coeffs)):
            bad = int(np.flatnonzero(~np.isfinite(self.coeffs))[0])
            raise ValidationError(f"Coefficient {bad} is not finite")

    def __call__(self, x):
        from ...services.bspline import eval_expansion
        return eval_expansion(self, x)

    def to_dict(self) -> dict:
        """Convert expansion to dictionary."""
        return {
            'spec': self.spec.to_dict(),
            'label': self.spec.label(),
            'coefficients': self.coeffs.tolist(),
            'metadata': self.metadata
        }
