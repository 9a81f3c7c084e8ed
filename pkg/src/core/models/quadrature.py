"""
Quadrature configuration and error budget for the Cauchy-integral coefficient rule.
"""
from dataclasses import dataclass

import numpy as np

from ..exceptions import ValidationError


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Trapezoidal rule on the circle |z| = r.

    Attributes:
        radius: Circle radius r (r > 0, r != 1)
        panels: Number of trapezoid panels M on [0, pi] (h = pi / M)
        eta: Decimal digits of working precision
    """
    radius: float
    panels: int
    eta: float = 16.0

    def __post_init__(self):
        """Validate configuration."""
        if not np.isfinite(self.radius) or self.radius <= 0:
            raise ValidationError(f"radius must be positive, got {self.radius}")

        if self.radius == 1.0:
            raise ValidationError("radius must differ from 1 (Q has a pole at z = 1)")

        if self.panels < 2:
            raise ValidationError(f"panels must be at least 2, got {self.panels}")

        if self.eta <= 0:
            raise ValidationError(f"eta must be positive, got {self.eta}")

    @property
    def step(self) -> float:
        """Panel width h = pi / M."""
        return np.pi / self.panels

    def nodes(self) -> np.ndarray:
        """Angles h_s = s h, s = 0 ... M."""
        return np.arange(self.panels + 1) * self.step

    def to_dict(self) -> dict:
        return {'radius': self.radius, 'panels': self.panels, 'eta': self.eta}


@dataclass(frozen=True)
class ErrorBudget:
    """
    A-priori error estimates for one coefficient.

    Attributes:
        discretization_bound: Leading-order trapezoid error (pi^3/(12 M^2))(k+1)^2 r^{2^{m-1}}
        roundoff_estimate: 10^{-eta} / (M r^k)
        prefactor: 1 / (M r^k)
        heuristic: True when the bound is applied outside the Haar case it was derived for
    """
    discretization_bound: float
    roundoff_estimate: float
    prefactor: float
    heuristic: bool = False

    def __post_init__(self):
        for name in ('discretization_bound', 'roundoff_estimate', 'prefactor'):
            if getattr(self, name) < 0:
                raise ValidationError(f"{name} must be non-negative")

    def total(self) -> float:
        return self.discretization_bound + self.roundoff_estimate

    def to_dict(self) -> dict:
        return {
            'discretization_bound': self.discretization_bound,
            'roundoff_estimate': self.roundoff_estimate,
            'prefactor': self.prefactor,
            'total': self.total(),
            'heuristic': self.heuristic
        }
