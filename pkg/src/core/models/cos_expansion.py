"""
Fourier-cosine (COS) expansion model.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..exceptions import ValidationError


@dataclass
class CosExpansion:
    """
    Truncated cosine series on [a, b].

    F[0] is stored at full weight and halved at evaluation.

    Attributes:
        interval: Expansion interval (a, b)
        coeffs: Cosine coefficients F_0 ... F_{N-1}
    """
    interval: Tuple[float, float]
    coeffs: np.ndarray

    def __post_init__(self):
        """Validate expansion."""
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        a, b = self.interval
        if a >= b:
            raise ValidationError(f"interval must satisfy a < b, got ({a}, {b})")

        if self.coeffs.ndim != 1 or len(self.coeffs) < 1:
            raise ValidationError("COS expansion needs at least one coefficient")

        if not np.all(np.isfinite(self.coeffs)):
            raise ValidationError("COS coefficients must be finite")

    @property
    def n_terms(self) -> int:
        return len(self.coeffs)

    def label(self) -> str:
        return f"COS-{self.n_terms}"

    def __call__(self, x):
        from ...services.cos_method import eval_cos_series
        return eval_cos_series(self, x)
