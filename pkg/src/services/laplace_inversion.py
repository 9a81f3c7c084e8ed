"""
Laplace transform inversion.

Two routes are provided:

- the Fourier bridge: for f(x) = 0 on x < 0 and h(x) = f(x) e^{-beta x}
  square-integrable, h^(w) = f~(beta + i w), so h is recovered with the WA
  method and f(x) = h(x) e^{beta x};
- the Bromwich integral discretized with the trapezoidal rule along
  Re(s) = sigma, used as a baseline.
"""
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ..config.logging_config import get_logger
from ..config.settings import settings
from ..core.entities.catalog_entry import LaplaceBridge
from ..core.exceptions import NumericalError, ValidationError
from ..core.models.quadrature import QuadratureConfig
from ..core.models.spectral_function import Convention, SpectralFunction
from ..core.models.spline_spec import SplineSpec, WaveletExpansion
from .cos_method import cosine_sum
from .wavelet_inversion import recover_coefficients

logger = get_logger(__name__)


def laplace_to_fourier(bridge: LaplaceBridge) -> SpectralFunction:
    """
    Fourier transform of the damped function h(x) = f(x) e^{-beta x}.

    Args:
        bridge: Laplace transform and damping beta

    Returns:
        w -> f~(beta + i w) in the e^{-iwx} convention
    """
    beta = bridge.beta
    return SpectralFunction(
        func=lambda w: bridge(beta + 1j * np.asarray(w)),
        convention=Convention.FORWARD_MINUS,
        name=bridge.name,
        notes=dict(bridge.notes, beta=beta, undamping="f(x) = h(x) exp(beta x)")
    )


@dataclass
class LaplaceReconstruction:
    """
    f(x) = h(x) e^{beta x} with h given by a wavelet expansion.

    Attributes:
        expansion: Recovered expansion of the damped function h
        beta: Damping used by the bridge
    """
    expansion: WaveletExpansion
    beta: float = 0.0

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self.expansion(x) * np.exp(self.beta * x)

    def label(self) -> str:
        return self.expansion.spec.label()


def invert_laplace(
    bridge: LaplaceBridge,
    spec: SplineSpec,
    quadrature: Optional[QuadratureConfig] = None
) -> LaplaceReconstruction:
    """
    Recover f from its Laplace transform on spec.interval.

    Args:
        bridge: Laplace transform and damping
        spec: Approximation space (interval should start at 0)
        quadrature: Cauchy-integral quadrature (defaults as in recover_coefficients)

    Returns:
        Callable reconstruction x -> f(x)
    """
    if spec.a < 0:
        logger.warning(f"interval starts at {spec.a} < 0 where f is assumed to vanish")

    expansion = recover_coefficients(laplace_to_fourier(bridge), spec, quadrature)
    logger.info(f"Laplace inversion of '{bridge.name}' with {spec.label()} (beta={bridge.beta})")
    return LaplaceReconstruction(expansion=expansion, beta=bridge.beta)


def bromwich_defaults(x_max: float, growth: float = 0.0) -> Tuple[float, float]:
    """
    Heuristic Bromwich parameters.

    Args:
        x_max: Largest requested x
        growth: Growth bound hint of f (|f(x)| <= C e^{growth x})

    Returns:
        (sigma, h) with sigma = 1 + growth and h x_max = pi/8
    """
    if x_max <= 0:
        raise ValidationError(f"x_max must be positive, got {x_max}")
    return 1.0 + growth, np.pi / (8.0 * x_max)


def bromwich_trapezoid(
    ltransform: Callable,
    sigma: float,
    h: float,
    x,
    n_terms: Optional[int] = None
):
    """
    Trapezoidal rule for the real form of the Bromwich integral.

    f(x) ~ (h e^{sigma x}/pi) Re f~(sigma)
           + (2 h e^{sigma x}/pi) sum_{k=1}^{n} Re f~(sigma + i k h) cos(k h x)

    Args:
        ltransform: Vectorized map s -> f~(s)
        sigma: Abscissa, larger than the growth bound of f
        h: Step along the line Re(s) = sigma
        x: Point(s), x > 0
        n_terms: Number of terms n (default from settings)

    Returns:
        Approximation of f(x)

    Raises:
        ValidationError: On x <= 0, h <= 0 or n_terms < 0
        NumericalError: If f~ returns non-finite values
    """
    n_terms = settings.bromwich_terms if n_terms is None else n_terms
    if n_terms < 0:
        raise ValidationError(f"n_terms must be non-negative, got {n_terms}")
    if h <= 0:
        raise ValidationError(f"step h must be positive, got {h}")

    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise ValidationError("Bromwich inversion requires x > 0")

    s = sigma + 1j * h * np.arange(n_terms + 1)
    values = np.real(np.asarray(ltransform(s), dtype=complex))
    bad = ~np.isfinite(values)
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise NumericalError(f"Laplace transform is not finite at s={s[k]:.6g} (k={k})")

    # k = 0 carries half the weight of the others
    weights = 2.0 * values
    weights[0] = values[0]
    result = h * np.exp(sigma * x) / np.pi * cosine_sum(weights, h * x)

    if not np.all(np.isfinite(result)):
        raise NumericalError(f"Bromwich sum is not finite (sigma={sigma}, h={h}, n={n_terms})")

    logger.debug(f"Bromwich: sigma={sigma}, h={h:.4g}, {n_terms} terms")
    return result.item() if scalar else result
