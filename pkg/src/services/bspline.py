"""
Cardinal B-splines, their Fourier transforms and scaling-function expansions.

All functions are pure and vectorized over their real/complex argument.
"""
import numpy as np

from ..core.exceptions import ValidationError
from ..core.models.spline_spec import MAX_ORDER, SplineSpec, WaveletExpansion

# Below this |w| the factor (1 - e^{-iw})/(iw) is evaluated from its Taylor series
SMALL_FREQUENCY = 1e-4


def _as_output(values: np.ndarray, scalar: bool):
    return values.item() if scalar else values


def _check_order(j: int):
    if not 0 <= j <= MAX_ORDER:
        raise ValidationError(f"order must be between 0 and {MAX_ORDER}, got {j}")


def eval_cardinal_bspline(j: int, x):
    """
    Evaluate the cardinal B-spline N_j.

    Uses the two-term recurrence
    N_p(x) = x/p N_{p-1}(x) + (p+1-x)/p N_{p-1}(x-1)
    bottom-up from N_0 = indicator of [0, 1). Breakpoints follow the
    half-open convention, so N_j vanishes outside [0, j+1).

    Args:
        j: Order (degree) of the spline
        x: Point(s) of evaluation

    Returns:
        N_j(x), float for scalar input
    """
    _check_order(j)
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)

    # N_0(x - i), i = 0 ... j
    values = [((x - i >= 0.0) & (x - i < 1.0)).astype(float) for i in range(j + 1)]

    for p in range(1, j + 1):
        values = [
            ((x - i) * values[i] + (p + 1 - (x - i)) * values[i + 1]) / p
            for i in range(j + 1 - p)
        ]

    return _as_output(values[0], scalar)


def bspline_fourier(j: int, w):
    """
    Fourier transform of N_j: ((1 - e^{-iw}) / (iw))^{j+1}.

    Accepts complex frequencies. The removable singularity at w = 0 is
    handled exactly (value 1) and by the series
    1 - iw/2 - w^2/6 + i w^3/24 for |w| < SMALL_FREQUENCY.

    Args:
        j: Order of the spline
        w: Frequency (real or complex)

    Returns:
        Complex transform value(s)
    """
    _check_order(j)
    scalar = np.ndim(w) == 0
    w = np.asarray(w, dtype=complex)

    small = np.abs(w) < SMALL_FREQUENCY
    w_safe = np.where(small, 1.0, w)
    direct = -np.expm1(-1j * w_safe) / (1j * w_safe)
    series = 1.0 - 0.5j * w - w ** 2 / 6.0 + 1j * w ** 3 / 24.0
    base = np.where(small, series, direct)

    return _as_output(base ** (j + 1), scalar)


def scaling_function(order: int, scale: int, k: int, y):
    """
    phi_{m,k}(y) = 2^{m/2} N_j(2^m y - k) without index validation.

    Args:
        order: Spline order j
        scale: Scale m (m = 0 is the unscaled spline)
        k: Translation index
        y: Point(s) of evaluation

    Returns:
        Scaling function value(s)
    """
    if scale < 0:
        raise ValidationError(f"scale must be non-negative, got {scale}")
    factor = 2.0 ** scale
    scalar = np.ndim(y) == 0
    values = np.sqrt(factor) * eval_cardinal_bspline(order, factor * np.asarray(y, dtype=float) - k)
    return _as_output(np.asarray(values), scalar)


def eval_scaling(spec: SplineSpec, k: int, y):
    """
    Evaluate the scaling function phi_{m,k}^j(y) = 2^{m/2} N_j(2^m y - k).

    Args:
        spec: Approximation space
        k: Translation index in 0 ... (j+1)(2^m - 1)
        y: Point(s) in the unit variable y = (j+1)(x-a)/(b-a)

    Returns:
        Scaling function value(s)

    Raises:
        ValidationError: If k is out of range
    """
    if not 0 <= k <= spec.max_index():
        raise ValidationError(f"index k={k} out of range 0..{spec.max_index()} for {spec.label()}")
    return scaling_function(spec.order, spec.scale, k, y)


def eval_expansion(expansion: WaveletExpansion, x):
    """
    Evaluate f^c_{m,j}(x) = sum_k c_k phi_{m,k}^j((j+1)(x-a)/(b-a)).

    Only the j+1 translates whose support contains the argument are summed,
    so the expansion vanishes outside [a, b).

    Args:
        expansion: Coefficients and approximation space
        x: Point(s) of evaluation

    Returns:
        Expansion value(s)
    """
    spec = expansion.spec
    coeffs = expansion.coeffs
    n_coeffs = len(coeffs)
    scalar = np.ndim(x) == 0

    t = 2.0 ** spec.scale * spec.to_unit(x)
    # keep floor() finite and small far outside the support
    t = np.clip(t, -1.0, n_coeffs + spec.order + 1.0)
    base = np.floor(t).astype(np.int64)

    result = np.zeros_like(t)
    for offset in range(spec.order + 1):
        k = base - offset
        valid = (k >= 0) & (k < n_coeffs)
        k_clipped = np.clip(k, 0, n_coeffs - 1)
        result += np.where(valid, coeffs[k_clipped] * eval_cardinal_bspline(spec.order, t - k), 0.0)

    result *= np.sqrt(2.0 ** spec.scale)
    return _as_output(result, scalar)
