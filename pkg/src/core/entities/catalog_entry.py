"""
Test-function entities: catalog entries and Laplace bridges.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple

import numpy as np

from ..exceptions import ValidationError
from ..models.spectral_function import SpectralFunction


@dataclass
class CatalogEntry:
    """
    A test function with its closed-form transform and time-domain reference.

    Attributes:
        name: Identifier (f1 ... f5)
        params: Named parameters (alpha for f2, sigma for f5)
        natural_interval: Interval the function is recovered on
        transform: Closed-form transform (e^{-iwx} convention)
        reference: Vectorized map x -> f(x)
        description: Short human-readable definition
    """
    name: str
    params: Dict[str, float]
    natural_interval: Tuple[float, float]
    transform: SpectralFunction
    reference: Callable
    description: str = ""

    def __post_init__(self):
        a, b = self.natural_interval
        if a >= b:
            raise ValidationError(f"natural interval must satisfy a < b, got ({a}, {b})")

    def evaluate(self, x) -> np.ndarray:
        """Evaluate the reference function."""
        return np.asarray(self.reference(np.asarray(x, dtype=float)), dtype=float)


@dataclass
class LaplaceBridge:
    """
    Laplace transform with the damping used to move it onto the Fourier axis.

    h(x) = f(x) e^{-beta x} must be square-integrable (caller-asserted) and
    f(x) = 0 for x < 0.

    Attributes:
        ltransform: Vectorized map s -> f~(s)
        beta: Real damping
        name: Identifier
    """
    ltransform: Callable
    beta: float = 0.0
    name: str = "laplace"
    notes: Dict = field(default_factory=dict)

    def __post_init__(self):
        if not np.isfinite(self.beta):
            raise ValidationError(f"beta must be finite, got {self.beta}")

    def __call__(self, s):
        return np.asarray(self.ltransform(np.asarray(s, dtype=complex)), dtype=complex)
