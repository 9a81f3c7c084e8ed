"""
Fourier-cosine (COS) series reconstruction from a characteristic function.

On [a, b] the cosine coefficients A_k of f are replaced by
F_k = (2/(b-a)) Re(xi(k pi/(b-a)) e^{-i k a pi/(b-a)}), which neglects the
mass of f outside the interval.
"""
from time import time
from typing import Optional, Tuple

import numpy as np

from ..config.logging_config import get_logger
from ..config.settings import settings
from ..core.exceptions import NumericalError, ValidationError
from ..core.interfaces.inverter import ISpectralInverter
from ..core.models.cos_expansion import CosExpansion
from ..core.models.spectral_function import SpectralFunction

logger = get_logger(__name__)

# Upper bound on the size of one cos(k theta) block
BLOCK_ELEMENTS = 2 ** 22


def cosine_sum(coeffs: np.ndarray, theta) -> np.ndarray:
    """
    sum_{k=0}^{N-1} coeffs[k] cos(k theta), vectorized over theta.

    Args:
        coeffs: Series coefficients
        theta: Angle(s)

    Returns:
        Series value(s), same shape as theta
    """
    coeffs = np.asarray(coeffs, dtype=float)
    theta = np.asarray(theta, dtype=float)
    flat = theta.ravel()
    ks = np.arange(len(coeffs))

    result = np.empty_like(flat)
    block = max(1, BLOCK_ELEMENTS // max(1, len(coeffs)))
    for start in range(0, len(flat), block):
        chunk = flat[start:start + block]
        result[start:start + block] = np.cos(np.outer(chunk, ks)) @ coeffs

    return result.reshape(theta.shape)


def cos_coefficients(xi: SpectralFunction, interval: Tuple[float, float], n_terms: int) -> CosExpansion:
    """
    Compute the COS coefficients F_0 ... F_{N-1}.

    Args:
        xi: Characteristic function (converted to the e^{+iwx} convention if needed)
        interval: Truncation interval (a, b)
        n_terms: Number of terms N

    Returns:
        Cosine expansion

    Raises:
        ValidationError: If N < 1 or a >= b
        NumericalError: If xi returns non-finite values
    """
    if n_terms < 1:
        raise ValidationError(f"n_terms must be at least 1, got {n_terms}")
    a, b = float(interval[0]), float(interval[1])
    if a >= b:
        raise ValidationError(f"interval must satisfy a < b, got ({a}, {b})")

    xi = xi.as_char_plus()
    length = b - a
    ks = np.arange(n_terms)
    w = ks * np.pi / length

    values = xi(w)
    bad = ~np.isfinite(values)
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise NumericalError(f"characteristic function is not finite at w={w[k]:.6g} (k={k})")

    coeffs = 2.0 / length * np.real(values * np.exp(-1j * ks * a * np.pi / length))
    logger.debug(f"COS-{n_terms}: |F_N-1| = {abs(coeffs[-1]):.3e} on [{a}, {b}]")

    return CosExpansion(interval=(a, b), coeffs=coeffs)


def eval_cos_series(expansion: CosExpansion, x):
    """
    Evaluate F_0/2 + sum_{k=1}^{N-1} F_k cos(k pi (x-a)/(b-a)).

    Args:
        expansion: Cosine expansion
        x: Point(s) in [a, b]

    Returns:
        Series value(s)
    """
    scalar = np.ndim(x) == 0
    a, b = expansion.interval
    weights = expansion.coeffs.copy()
    weights[0] *= 0.5

    theta = np.pi * (np.asarray(x, dtype=float) - a) / (b - a)
    values = cosine_sum(weights, theta)
    return values.item() if scalar else values


class CosInverterService(ISpectralInverter):
    """Inversion service using the Fourier-cosine expansion."""

    def __init__(self, n_terms: Optional[int] = None):
        """
        Initialize inverter.

        Args:
            n_terms: Number of series terms N (default from settings)
        """
        n_terms = settings.cos_terms if n_terms is None else n_terms
        if n_terms < 1:
            raise ValidationError(f"n_terms must be at least 1, got {n_terms}")
        self.n_terms = n_terms
        logger.info(f"Initialized COS inverter: {self.get_method_label()}")

    def invert(self, transform: SpectralFunction, interval: Tuple[float, float]) -> CosExpansion:
        start_time = time()
        expansion = cos_coefficients(transform, interval, self.n_terms)
        logger.info(
            f"{expansion.label()} coefficients of '{transform.name}' "
            f"computed in {time() - start_time:.3f}s"
        )
        return expansion

    def get_method_label(self) -> str:
        return f"COS-{self.n_terms}"

    def describe(self) -> dict:
        return {'method': 'cos', 'n_terms': self.n_terms}
