"""
Wavelet Approximation (WA) service: recovers B-spline expansion coefficients
from a Fourier transform with a discretized Cauchy integral on |z| = r.

The coefficient generating polynomial P_{m,j}(z) = sum_k c_k z^k is
approximated by

    Q_{m,j}(z) = 2^{m/2} (j+1) z^{-C a} f^(C i log z) (log z)^{j+1}
                 / ((b - a) (z - 1)^{j+1}),      C = 2^m (j+1) / (b - a),

and c_k is the k-th Taylor coefficient of P, evaluated with the compound
trapezoidal rule on the upper half circle.
"""
from time import time
from typing import Optional, Tuple

import numpy as np
from scipy.fft import dct

from ..config.logging_config import get_logger
from ..config.settings import settings
from ..core.exceptions import DomainError, NumericalError, ValidationError
from ..core.interfaces.inverter import ISpectralInverter
from ..core.models.quadrature import ErrorBudget, QuadratureConfig
from ..core.models.spectral_function import SpectralFunction
from ..core.models.spline_spec import SplineSpec, WaveletExpansion

logger = get_logger(__name__)

SYMMETRY_RTOL = 1e-8


def _q_from_log(fhat: SpectralFunction, spec: SplineSpec, log_z: np.ndarray) -> np.ndarray:
    """Q_{m,j} evaluated from log(z); z - 1 is formed as expm1(log z)."""
    scale = spec.frequency_scale()
    j1 = spec.order + 1

    ratio = log_z / np.expm1(log_z)  # log(z) / (z - 1)
    shift = np.exp(-scale * spec.a * log_z)  # z^{-C a}, principal branch
    values = fhat(scale * 1j * log_z)

    return np.sqrt(2.0 ** spec.scale) * j1 / spec.length * shift * values * ratio ** j1


def _check_finite(values: np.ndarray, angles: np.ndarray, radius: float, what: str = "Q"):
    bad = ~np.isfinite(values)
    if np.any(bad):
        idx = int(np.flatnonzero(bad)[0])
        raise NumericalError(
            f"{what} is not finite at r={radius:g}, u={angles[idx]:.6g} "
            f"({int(bad.sum())} bad nodes); radius too small or transform overflow"
        )


def _warn_if_unstable(radius: float):
    if abs(radius - 1.0) > settings.stability_epsilon:
        logger.warning(
            f"|r - 1| = {abs(radius - 1.0):.4g} exceeds the stability threshold "
            f"{settings.stability_epsilon}; roundoff may dominate at high scales"
        )


def _circle_values(fhat: SpectralFunction, spec: SplineSpec, radius: float, angles: np.ndarray) -> np.ndarray:
    log_z = np.log(radius) + 1j * np.asarray(angles, dtype=float)
    values = _q_from_log(fhat, spec, log_z)
    _check_finite(values, np.asarray(angles, dtype=float), radius)
    return values


def _symmetry_check(fhat: SpectralFunction, spec: SplineSpec, radius: float) -> Tuple[bool, float]:
    """
    Spot check Q(conj z) = conj Q(z) at u = pi/3 and the imaginary residual on the real axis.

    Returns:
        (symmetric, max |Im Q(+-r)|)
    """
    upper, lower, right, left = _circle_values(
        fhat, spec, radius, np.array([np.pi / 3, -np.pi / 3, 0.0, np.pi])
    )
    mismatch = abs(upper - np.conj(lower))
    symmetric = mismatch <= SYMMETRY_RTOL * (1.0 + abs(upper))
    residual = float(max(abs(right.imag), abs(left.imag)))

    if not symmetric:
        logger.warning(
            f"Q(conj z) != conj Q(z) at u = pi/3 (mismatch {mismatch:.3e}); "
            "the half-circle rule assumes a real-valued function"
        )
    return bool(symmetric), residual


def _inverse_powers(radius: float, ks: np.ndarray) -> np.ndarray:
    """r^{-k}, overflowing to inf instead of raising."""
    with np.errstate(over='ignore'):
        return np.exp(-np.asarray(ks, dtype=float) * np.log(radius))


def _trapezoid_cosine_sums(real_values: np.ndarray, n_coeffs: int) -> np.ndarray:
    """
    S_k = q_0 + (-1)^k q_M + 2 sum_{s=1}^{M-1} q_s cos(k s pi / M), k = 0 ... n_coeffs-1.

    This is a type-I DCT of the M+1 node values; indices beyond M alias and
    are summed explicitly.
    """
    panels = len(real_values) - 1
    if n_coeffs <= panels + 1:
        return dct(real_values, type=1)[:n_coeffs]

    angles = np.arange(panels + 1) * np.pi / panels
    weights = np.full(panels + 1, 2.0)
    weights[0] = weights[-1] = 1.0
    ks = np.arange(n_coeffs)
    return np.cos(np.outer(ks, angles)) @ (weights * real_values)


def eval_Q(fhat: SpectralFunction, spec: SplineSpec, z):
    """
    Evaluate Q_{m,j}(z) with the principal logarithm.

    Args:
        fhat: Transform of the function (converted to e^{-iwx} if needed)
        spec: Approximation space
        z: Complex point(s), z not in {0, 1}

    Returns:
        Complex value(s) of Q

    Raises:
        DomainError: If z is 0 or 1
        NumericalError: If the transform returns non-finite values
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=complex)

    if np.any(z == 0):
        raise DomainError("Q is undefined at z = 0 (log singularity)")
    if np.any(z == 1):
        raise DomainError("Q has a pole at z = 1")

    fhat = fhat.as_forward_minus()
    log_z = np.log(z)
    values = _q_from_log(fhat, spec, log_z)
    _check_finite(np.atleast_1d(values), np.atleast_1d(log_z.imag), float(np.max(np.abs(z))))

    return values.item() if scalar else values


def step_q_real_part(m: int, radius: float, u):
    """
    Closed-form Re(Q_{m,0}(r e^{iu})) for the step function on [1/2, 1) over [0, 1].

    Args:
        m: Scale
        radius: Circle radius r
        u: Angle(s) in [0, pi]

    Returns:
        Real part of Q
    """
    u = np.asarray(u, dtype=float)
    n, h = 2 ** m, 2 ** (m - 1)
    r = radius
    numerator = (
        r ** (n + 1) * np.cos((n - 1) * u)
        - r ** n * np.cos(n * u)
        - r ** (h + 1) * np.cos((h - 1) * u)
        + r ** h * np.cos(h * u)
    )
    return numerator / (np.sqrt(2.0 ** m) * (r ** 2 - 2 * r * np.cos(u) + 1))


def recover_coefficients(
    fhat: SpectralFunction,
    spec: SplineSpec,
    quadrature: Optional[QuadratureConfig] = None
) -> WaveletExpansion:
    """
    Recover c_{m,k}^j with the M-panel trapezoidal rule on the upper half circle.

    c_k = (1/(M r^k)) (Q(r) + (-1)^k Q(-r) + 2 sum_s Re Q(r e^{ih_s}) cos(k h_s)), k >= 1
    c_0 = (1/pi) int_0^pi Re Q(r e^{iu}) du with the same nodes.

    Args:
        fhat: Transform of the function
        spec: Approximation space
        quadrature: Radius, panels and precision (defaults: r from settings, M = (j+1) 2^m)

    Returns:
        Recovered expansion

    Raises:
        NumericalError: On non-finite Q values or coefficients
    """
    q = quadrature or QuadratureConfig(
        radius=settings.wa_radius, panels=spec.default_panels(), eta=settings.wa_eta
    )
    fhat = fhat.as_forward_minus()
    _warn_if_unstable(q.radius)

    values = _circle_values(fhat, spec, q.radius, q.nodes())
    symmetric, residual = _symmetry_check(fhat, spec, q.radius)

    n_coeffs = spec.coefficient_count()
    sums = _trapezoid_cosine_sums(values.real, n_coeffs)

    ks = np.arange(n_coeffs)
    coeffs = sums * _inverse_powers(q.radius, ks) / q.panels
    coeffs[0] = sums[0] / (2 * q.panels)

    bad = ~np.isfinite(coeffs)
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise NumericalError(
            f"Coefficient k={k} is not finite (prefactor 1/(M r^k) overflow at r={q.radius:g}); "
            "increase the radius"
        )

    logger.debug(
        f"{spec.label()}: {n_coeffs} coefficients from {q.panels + 1} nodes at r={q.radius}"
    )

    metadata = {
        'rule': 'standard',
        'quadrature': q.to_dict(),
        'symmetry_ok': symmetric,
        'imaginary_residual': residual,
        'heuristic_radius': False,
        'error_budget': error_budget(spec, q, spec.max_index()).to_dict()
    }
    metadata.update(fhat.notes)
    return WaveletExpansion(spec=spec, coeffs=coeffs, metadata=metadata)


def recover_coefficients_fast(
    fhat: SpectralFunction,
    spec: SplineSpec,
    radius: Optional[float] = None
) -> WaveletExpansion:
    """
    Recover coefficients with M = 2k panels per coefficient.

    With h = pi/(2k), cos(k h_s) vanishes on odd nodes and alternates on even
    ones, so
    c_k = (1/(2k r^k)) (Q(r) + (-1)^k Q(-r) + 2 sum_{s=1}^{k-1} (-1)^s Re Q(r e^{i s pi / k})).
    The rule aliases the coefficient of z^{3k} into c_k; it matches the
    standard rule for 3k > (j+1)(2^m - 1). c_0 uses the standard k = 0 rule.

    Args:
        fhat: Transform of the function
        spec: Approximation space
        radius: Circle radius (default from settings)

    Returns:
        Recovered expansion
    """
    r = settings.wa_radius if radius is None else radius
    fhat = fhat.as_forward_minus()
    n_coeffs = spec.coefficient_count()

    base = recover_coefficients(
        fhat, spec, QuadratureConfig(radius=r, panels=spec.default_panels(), eta=settings.wa_eta)
    )

    ks = np.arange(1, n_coeffs)
    steps = [np.arange(k + 1) for k in ks]
    t = np.concatenate(steps)
    k_rep = np.repeat(ks, ks + 1)
    angles = np.pi * t / k_rep

    values = _circle_values(fhat, spec, r, angles).real
    weights = np.where((t == 0) | (t == k_rep), 1.0, 2.0) * np.where(t % 2 == 0, 1.0, -1.0)

    starts = np.concatenate(([0], np.cumsum(ks + 1)[:-1]))
    sums = np.add.reduceat(values * weights, starts)

    coeffs = np.empty(n_coeffs)
    coeffs[0] = base.coeffs[0]
    coeffs[1:] = sums * _inverse_powers(r, ks) / (2 * ks)

    bad = ~np.isfinite(coeffs)
    if np.any(bad):
        raise NumericalError(f"Coefficient k={int(np.flatnonzero(bad)[0])} is not finite at r={r:g}")

    metadata = dict(base.metadata, rule='fast')
    # the budget above is for M = (j+1) 2^m panels
    metadata.pop('error_budget')
    metadata['quadrature'] = {'radius': r, 'panels': 'M = 2k', 'eta': settings.wa_eta}
    return WaveletExpansion(spec=spec, coeffs=coeffs, metadata=metadata)


def optimal_radius(m: int, k: int, panels: int, eta: float = 16.0) -> float:
    """
    Radius balancing discretization and roundoff error (derived for Haar, j = 0).

    r_{m,k} = (12 M 10^{-eta} / (pi^3 (k+1)^2))^{1 / (2^{m-1} + k)}

    Args:
        m: Scale
        k: Coefficient index
        panels: Trapezoid panels M
        eta: Decimal digits of precision

    Returns:
        Optimal radius
    """
    if m < 1 or k < 0 or panels < 1 or eta <= 0:
        raise ValidationError(f"invalid radius parameters m={m}, k={k}, M={panels}, eta={eta}")
    base = 12.0 * panels * 10.0 ** (-eta) / (np.pi ** 3 * (k + 1) ** 2)
    return float(base ** (1.0 / (2 ** (m - 1) + k)))


def error_budget(spec: SplineSpec, quadrature: QuadratureConfig, k: int) -> ErrorBudget:
    """
    Leading-order error estimates for coefficient k.

    Args:
        spec: Approximation space
        quadrature: Radius, panels and precision
        k: Coefficient index

    Returns:
        Error budget (discretization bound is heuristic for j > 0)
    """
    if not 0 <= k <= spec.max_index():
        raise ValidationError(f"index k={k} out of range 0..{spec.max_index()}")

    r, panels = quadrature.radius, quadrature.panels
    prefactor = float(_inverse_powers(r, [k])[0] / panels)
    roundoff = 10.0 ** (-quadrature.eta) * prefactor
    with np.errstate(over='ignore'):
        growth = np.power(r, 2.0 ** (spec.scale - 1))
    discretization = np.pi ** 3 / (12.0 * panels ** 2) * (k + 1) ** 2 * growth

    return ErrorBudget(
        discretization_bound=float(discretization),
        roundoff_estimate=float(roundoff),
        prefactor=prefactor,
        heuristic=spec.order > 0
    )


def recover_coefficients_optimal(
    fhat: SpectralFunction,
    spec: SplineSpec,
    panels: Optional[int] = None,
    eta: Optional[float] = None
) -> WaveletExpansion:
    """
    Recover each coefficient on its own circle r_{m,k} = optimal_radius(m, k, M, eta).

    Args:
        fhat: Transform of the function
        spec: Approximation space
        panels: Trapezoid panels (default (j+1) 2^m)
        eta: Decimal digits of precision (default from settings)

    Returns:
        Recovered expansion; metadata lists the radii
    """
    panels = panels or spec.default_panels()
    eta = settings.wa_eta if eta is None else eta
    fhat = fhat.as_forward_minus()

    n_coeffs = spec.coefficient_count()
    radii = np.array([optimal_radius(spec.scale, k, panels, eta) for k in range(n_coeffs)])
    angles = np.arange(panels + 1) * np.pi / panels

    coeffs = np.empty(n_coeffs)
    for k, r in enumerate(radii):
        values = _circle_values(fhat, spec, r, angles)
        sums = _trapezoid_cosine_sums(values.real, k + 1)
        if k == 0:
            coeffs[k] = sums[0] / (2 * panels)
        else:
            coeffs[k] = sums[k] * _inverse_powers(r, [k])[0] / panels
        if not np.isfinite(coeffs[k]):
            raise NumericalError(f"Coefficient k={k} is not finite at optimal radius r={r:g}")

    if spec.order > 0:
        logger.warning("optimal radius is derived for j = 0; applying it heuristically")

    metadata = {
        'rule': 'optimal_radius',
        'quadrature': {'radius': radii.tolist(), 'panels': panels, 'eta': eta},
        'heuristic_radius': spec.order > 0
    }
    metadata.update(fhat.notes)
    return WaveletExpansion(spec=spec, coeffs=coeffs, metadata=metadata)


class WaveletInverterService(ISpectralInverter):
    """Inversion service using B-spline scaling functions (WA method)."""

    RULES = ('standard', 'fast', 'optimal')

    def __init__(
        self,
        order: int,
        scale: int,
        radius: Optional[float] = None,
        panels: Optional[int] = None,
        eta: Optional[float] = None,
        rule: str = 'standard'
    ):
        """
        Initialize inverter.

        Args:
            order: B-spline order j
            scale: Scale m
            radius: Circle radius (default from settings)
            panels: Trapezoid panels (default (j+1) 2^m)
            eta: Decimal digits of precision (default from settings)
            rule: 'standard', 'fast' or 'optimal'
        """
        if rule not in self.RULES:
            raise ValidationError(f"unknown coefficient rule '{rule}', expected one of {self.RULES}")
        self.order = order
        self.scale = scale
        self.radius = settings.wa_radius if radius is None else radius
        self.panels = panels
        self.eta = settings.wa_eta if eta is None else eta
        self.rule = rule
        logger.info(f"Initialized WA inverter: {self.get_method_label()} (rule={rule}, r={self.radius})")

    def invert(self, transform: SpectralFunction, interval: Tuple[float, float]) -> WaveletExpansion:
        """
        Recover the expansion of the function on an interval.

        Args:
            transform: Transform of the function
            interval: Recovery interval (a, b)

        Returns:
            Wavelet expansion (callable on x)
        """
        spec = SplineSpec(order=self.order, scale=self.scale, interval=tuple(interval))
        start_time = time()

        if self.rule == 'fast':
            expansion = recover_coefficients_fast(transform, spec, self.radius)
        elif self.rule == 'optimal':
            expansion = recover_coefficients_optimal(transform, spec, self.panels, self.eta)
        else:
            quadrature = QuadratureConfig(
                radius=self.radius,
                panels=self.panels or spec.default_panels(),
                eta=self.eta
            )
            expansion = recover_coefficients(transform, spec, quadrature)

        execution_time = time() - start_time
        expansion.metadata['execution_time'] = execution_time
        logger.info(
            f"{spec.label()} recovered {spec.coefficient_count()} coefficients "
            f"of '{transform.name}' in {execution_time:.3f}s"
        )
        return expansion

    def get_method_label(self) -> str:
        return f"WA{self.order}-{self.scale}"

    def describe(self) -> dict:
        return {
            'method': 'wa',
            'order': self.order,
            'scale': self.scale,
            'radius': self.radius,
            'panels': self.panels or (self.order + 1) * 2 ** self.scale,
            'eta': self.eta,
            'rule': self.rule
        }
