"""
Spectral (transform-side) function model.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict

import numpy as np


class Convention(str, Enum):
    """Sign convention of the transform kernel."""
    FORWARD_MINUS = "forward_minus"  # f^(w) = int e^{-iwx} f(x) dx
    CHAR_PLUS = "char_plus"  # xi(w) = int e^{+iwx} f(x) dx


@dataclass(frozen=True)
class SpectralFunction:
    """
    Evaluatable transform w -> C with a declared sign convention.

    The callable must accept complex numpy arrays: the wavelet method evaluates
    it at w = C * i * log(z) on a circle of radius r != 1.

    Attributes:
        func: Vectorized map w -> complex
        convention: Kernel sign convention
        name: Identifier used in logs and reports
        notes: Assumptions attached to the function (e.g. conversions applied)
    """
    func: Callable
    convention: Convention = Convention.FORWARD_MINUS
    name: str = "transform"
    notes: Dict = field(default_factory=dict)

    def __call__(self, w):
        return np.asarray(self.func(np.asarray(w)), dtype=complex)

    def as_forward_minus(self) -> "SpectralFunction":
        """
        Return the same transform in the e^{-iwx} convention.

        xi(w) = f^(-w) holds for every complex w, so the conversion reflects the
        argument. On the real axis and for real-valued f this coincides with
        taking the complex conjugate.
        """
        if self.convention == Convention.FORWARD_MINUS:
            return self
        inner = self.func
        notes = dict(self.notes, converted_from=self.convention.value)
        return SpectralFunction(
            func=lambda w: inner(-np.asarray(w)),
            convention=Convention.FORWARD_MINUS,
            name=self.name,
            notes=notes
        )

    def as_char_plus(self) -> "SpectralFunction":
        """Return the same transform in the e^{+iwx} (characteristic function) convention."""
        if self.convention == Convention.CHAR_PLUS:
            return self
        inner = self.func
        notes = dict(self.notes, converted_from=self.convention.value)
        return SpectralFunction(
            func=lambda w: inner(-np.asarray(w)),
            convention=Convention.CHAR_PLUS,
            name=self.name,
            notes=notes
        )
