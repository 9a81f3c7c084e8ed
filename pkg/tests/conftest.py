"""
Shared fixtures.
"""
import numpy as np
import pytest

from src.core.models.spectral_function import Convention, SpectralFunction
from src.core.models.spline_spec import SplineSpec, WaveletExpansion
from src.infrastructure.repositories.transform_catalog import catalog


@pytest.fixture
def f3_entry():
    return catalog('f3')


@pytest.fixture
def f4_entry():
    return catalog('f4')


@pytest.fixture
def random_expansion():
    """Factory for expansions with reproducible random coefficients."""
    def make(order: int, scale: int, interval=(-1.0, 2.0), seed: int = 0) -> WaveletExpansion:
        spec = SplineSpec(order=order, scale=scale, interval=interval)
        coeffs = np.random.default_rng(seed).normal(size=spec.coefficient_count())
        return WaveletExpansion(spec=spec, coeffs=coeffs)
    return make


@pytest.fixture
def uniform_density():
    """Characteristic function of the uniform density on [a, b]."""
    def make(a: float, b: float) -> SpectralFunction:
        def xi(w):
            w = np.asarray(w, dtype=complex)
            safe = np.where(w == 0, 1.0, w)
            values = (np.exp(1j * safe * b) - np.exp(1j * safe * a)) / (1j * safe * (b - a))
            return np.where(w == 0, 1.0, values)
        return SpectralFunction(func=xi, convention=Convention.CHAR_PLUS, name='uniform')
    return make
