"""
Catalog of test functions with closed-form transforms.

Fourier transforms use the e^{-iwx} convention and accept complex frequencies.
"""
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from ...config.logging_config import get_logger
from ...core.entities.catalog_entry import CatalogEntry, LaplaceBridge
from ...core.exceptions import CatalogError, ValidationError
from ...core.models.spectral_function import Convention, SpectralFunction
from ...core.models.spline_spec import SplineSpec, WaveletExpansion
from ...services.bspline import bspline_fourier

logger = get_logger(__name__)

DEFAULT_PARAMS = {
    'f1': {},
    'f2': {'alpha': 50.0},
    'f3': {},
    'f4': {},
    'f5': {'sigma': 0.1},
}

NATURAL_INTERVALS = {
    'f1': (0.0, 1.0),
    'f2': (-1.0, 1.0),
    'f3': (0.0, 2.0),
    'f4': (-1.0, 1.0),
    'f5': (-1.0, 1.0),
}


def expansion_transform(expansion: WaveletExpansion, name: str = "expansion") -> SpectralFunction:
    """
    Closed-form transform of a B-spline expansion.

    With xi = (b-a) w/(j+1) and phi^_{m,k}(xi) = 2^{-m/2} N^_j(xi/2^m) e^{-ik xi/2^m},
    f^(w) = ((b-a)/(j+1)) e^{-iaw} sum_k c_k phi^_{m,k}(xi).

    Args:
        expansion: Coefficients and approximation space
        name: Name of the resulting transform

    Returns:
        Transform in the e^{-iwx} convention
    """
    spec = expansion.spec
    coeffs = expansion.coeffs.copy()
    j1 = spec.order + 1
    dilation = 2.0 ** spec.scale

    def transform(w):
        w = np.asarray(w, dtype=complex)
        t = spec.length * w / j1 / dilation
        modulation = P.polyval(np.exp(-1j * t), coeffs)
        return (
            spec.length / j1 * np.exp(-1j * spec.a * w)
            * bspline_fourier(spec.order, t) * modulation / np.sqrt(dilation)
        )

    return SpectralFunction(func=transform, convention=Convention.FORWARD_MINUS, name=name)


def _step_entry() -> CatalogEntry:
    # (e^{-iw/2} - e^{-iw})/(iw) = e^{-iw/2} N^_0(w/2) / 2, regular at w = 0
    def transform(w):
        w = np.asarray(w, dtype=complex)
        return 0.5 * np.exp(-0.5j * w) * bspline_fourier(0, w / 2)

    return CatalogEntry(
        name='f1',
        params={},
        natural_interval=NATURAL_INTERVALS['f1'],
        transform=SpectralFunction(func=transform, name='f1'),
        reference=lambda x: ((x >= 0.5) & (x < 1.0)).astype(float),
        description="indicator of [1/2, 1)"
    )


def _exponential_entry(alpha: float) -> CatalogEntry:
    if alpha <= 0:
        raise ValidationError(f"alpha must be positive, got {alpha}")

    return CatalogEntry(
        name='f2',
        params={'alpha': alpha},
        natural_interval=NATURAL_INTERVALS['f2'],
        transform=SpectralFunction(
            func=lambda w: 2 * alpha / (alpha ** 2 + np.asarray(w, dtype=complex) ** 2),
            name='f2'
        ),
        reference=lambda x: np.exp(-alpha * np.abs(x)),
        description=f"exp(-{alpha:g}|x|)"
    )


def _spline_entry(name: str, spec: SplineSpec, coeffs, description: str) -> CatalogEntry:
    expansion = WaveletExpansion(spec=spec, coeffs=coeffs, metadata={'source': 'catalog'})
    return CatalogEntry(
        name=name,
        params={},
        natural_interval=spec.interval,
        transform=expansion_transform(expansion, name=name),
        reference=expansion,
        description=description
    )


def _gaussian_entry(sigma: float) -> CatalogEntry:
    if sigma <= 0:
        raise ValidationError(f"sigma must be positive, got {sigma}")

    return CatalogEntry(
        name='f5',
        params={'sigma': sigma},
        natural_interval=NATURAL_INTERVALS['f5'],
        transform=SpectralFunction(
            func=lambda w: np.exp(-np.asarray(w, dtype=complex) ** 2 * sigma ** 2 / 2),
            name='f5'
        ),
        reference=lambda x: np.exp(-x ** 2 / (2 * sigma ** 2)) / (sigma * np.sqrt(2 * np.pi)),
        description=f"normal density with sigma={sigma:g}"
    )


class TransformCatalog:
    """Repository of the test functions f1 ... f5."""

    def names(self) -> Tuple[str, ...]:
        return tuple(DEFAULT_PARAMS)

    def get(self, name: str, params: Optional[Dict[str, float]] = None) -> CatalogEntry:
        """
        Build a catalog entry.

        Args:
            name: f1 ... f5
            params: alpha (f2) or sigma (f5); missing values take defaults

        Returns:
            Catalog entry

        Raises:
            CatalogError: Unknown name
            ValidationError: Unknown or invalid parameters
        """
        if name not in DEFAULT_PARAMS:
            raise CatalogError(f"unknown function '{name}', expected one of {self.names()}")

        given = {k: v for k, v in (params or {}).items() if v is not None}
        unknown = set(given) - set(DEFAULT_PARAMS[name])
        if unknown:
            raise ValidationError(f"{name} takes no parameter(s) {sorted(unknown)}")
        values = dict(DEFAULT_PARAMS[name], **given)

        if name == 'f1':
            entry = _step_entry()
        elif name == 'f2':
            entry = _exponential_entry(float(values['alpha']))
        elif name == 'f3':
            entry = _spline_entry(
                'f3', SplineSpec(order=1, scale=1, interval=(0.0, 2.0)), [2.0, 0.0, 0.0],
                "2 phi_{1,0} (hat function)"
            )
        elif name == 'f4':
            entry = _spline_entry(
                'f4', SplineSpec(order=1, scale=2, interval=(-1.0, 1.0)), np.exp(-np.arange(7.0)),
                "sum_k exp(-k) phi_{2,k}(x + 1)"
            )
        else:
            entry = _gaussian_entry(float(values['sigma']))

        logger.debug(f"Catalog entry {entry.name}: {entry.description}")
        return entry


def catalog(name: str, params: Optional[Dict[str, float]] = None) -> CatalogEntry:
    """Shortcut for TransformCatalog().get(name, params)."""
    return TransformCatalog().get(name, params)


# Laplace transforms: name -> (f~(s), f(x) for x >= 0, growth bound)
LAPLACE_FUNCTIONS: Dict[str, Tuple[Callable, Callable, float]] = {
    'exp': (lambda s: 1.0 / (s + 1.0), lambda x: np.exp(-np.asarray(x, dtype=float)), 0.0),
    'one': (lambda s: 1.0 / s, lambda x: np.ones_like(np.asarray(x, dtype=float)), 0.0),
}


def laplace_catalog(name: str, beta: float = 0.0) -> Tuple[LaplaceBridge, Callable, float]:
    """
    Laplace test functions.

    Args:
        name: 'exp' (f~(s) = 1/(s+1)) or 'one' (f~(s) = 1/s)
        beta: Damping for the Fourier bridge

    Returns:
        (bridge, reference x -> f(x), growth bound)
    """
    if name not in LAPLACE_FUNCTIONS:
        raise CatalogError(f"unknown Laplace function '{name}', expected one of {tuple(LAPLACE_FUNCTIONS)}")
    ltransform, reference, growth = LAPLACE_FUNCTIONS[name]
    return LaplaceBridge(ltransform=ltransform, beta=beta, name=name), reference, growth
