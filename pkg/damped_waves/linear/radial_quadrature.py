#######################################################################
# Project: Damped Waves Module
# File: radial_quadrature.py
# Description: Radial frequency-quadrature oracle for norms on R^n
# Author: AbigailWilliams1692
# Created: 2026-09-15
# Updated: 2026-10-18
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import math
from typing import Callable, List

# Third-party Packages
import numpy as np
from scipy.integrate import quad
from scipy.special import gamma

# Local Packages
from damped_waves.kernels import ModelSpec, kernel_arrays, root_arrays
from damped_waves.linear.state import RadialProfile
from damped_waves.model.exceptions import QuadratureError

RTOL = 1e-8
# Subintervals QUADPACK may create beyond the breakpoint segments
QUAD_LIMIT = 400
# A flagged result is kept when its error estimate stays within this multiple of rtol
ROUNDOFF_SLACK = 100.0
# exp(-46) ~ 1e-20: kernel damping beyond the cutoff radius
DAMPING_EXPONENT = 46.0


#######################################################################
# Helper Functions
#######################################################################
def unit_sphere_area(n: int) -> float:
    """Surface area of the unit sphere in R^n, 2 pi^{n/2} / Gamma(n/2)."""
    return float(2.0 * math.pi ** (n / 2.0) / gamma(n / 2.0))


def adaptive_integral(
    integrand: Callable[[np.ndarray], np.ndarray],
    breakpoints: List[float],
    rtol: float = RTOL,
) -> float:
    """
    Integral over [breakpoints[0], breakpoints[-1]] by QUADPACK's adaptive
    Gauss-Kronrod rule, with the interior breakpoints handed to ``quad``.

    :param integrand: Vectorized integrand; called with one-element arrays.
    :param breakpoints: Increasing segment edges.
    :param rtol: Relative tolerance.
    :return: The integral.
    :raises QuadratureError: If the integrand is not finite or refinement stalls above rtol.
    """
    a, b = float(breakpoints[0]), float(breakpoints[-1])
    interior = [float(x) for x in breakpoints[1:-1]]

    def scalar(r: float) -> float:
        value = float(integrand(np.array([r]))[0])
        if not math.isfinite(value):
            raise QuadratureError(f"Radial integrand is not finite at r={r!r}.")
        return value

    result = quad(
        scalar,
        a,
        b,
        points=interior or None,
        epsabs=0.0,
        epsrel=rtol,
        limit=QUAD_LIMIT + 4 * len(interior),
        full_output=1,
    )
    value, abserr = float(result[0]), float(result[1])
    if not math.isfinite(value):
        raise QuadratureError("Radial quadrature returned a non-finite value.")
    # A fourth element is QUADPACK's message for ier > 0
    if len(result) > 3 and abserr > ROUNDOFF_SLACK * rtol * abs(value):
        raise QuadratureError(
            f"Adaptive radial quadrature stalled at error {abserr:.3g} for value {value:.6g}: {result[3]}"
        )
    return value


def damping_cutoff(model: ModelSpec, t: float, r_limit: float) -> float:
    """
    Smallest radius below r_limit beyond which every sampled mode is damped by
    more than exp(-DAMPING_EXPONENT) in energy at time t.
    """
    radii = np.geomspace(min(1e-6, r_limit / 10.0), r_limit, 400)
    decay = -2.0 * t * root_arrays(model, radii).lambda_plus.real
    damped = decay >= DAMPING_EXPONENT
    if not damped[-1]:
        return r_limit
    # Last undamped sample, scanning from the top
    undamped = np.nonzero(~damped)[0]
    if undamped.size == 0:
        return float(radii[0])
    return float(radii[min(undamped[-1] + 1, radii.size - 1)])


def radial_breakpoints(model: ModelSpec, t: float, r_max: float) -> List[float]:
    """
    Segment edges 0, r_floor, 2 r_floor, 4 r_floor, ..., r_max, with r_floor below
    the low-frequency scale that carries the large-time decay.
    """
    sigma = model.sigma_float
    scales = [1.0, 1.0 / t, t ** (-1.0 / (2.0 * sigma))]
    if sigma < 1.0:
        scales.append(t ** (-1.0 / (2.0 * (1.0 - sigma))))
    r_floor = 1e-3 * min(scales)
    if r_floor >= r_max:
        return [0.0, r_max]
    count = int(math.ceil(math.log2(r_max / r_floor)))
    edges = [0.0] + [r_floor * 2.0**k for k in range(count)] + [r_max]
    return sorted(set(edges))


#######################################################################
# Radial Norm
#######################################################################
def radial_norm(
    model: ModelSpec,
    j: int,
    kappa: float,
    v0hat: RadialProfile,
    v1hat: RadialProfile,
    t: float,
    rtol: float = RTOL,
) -> float:
    """
    ||d_t^j v(t)||_{H-dot^kappa} on R^n for radial data, by Parseval:
    (|S^{n-1}| / (2 pi)^n * int_0^{r_max} |d_t^j w(t,r)|^2 r^{2 kappa + n - 1} dr)^{1/2}
    with w = K0 v0hat + K1 v1hat.

    :param model: ModelSpec: The equation parameters.
    :param j: int: Time-derivative order, 0 or 1.
    :param kappa: float: Nonnegative smoothness.
    :param v0hat: RadialProfile: Transform of v(0).
    :param v1hat: RadialProfile: Transform of v_t(0).
    :param t: float: Positive time.
    :param rtol: float: Relative tolerance of the adaptive quadrature.
    :return: float: The norm.
    """
    if not t > 0:
        raise ValueError("t must be positive")
    if j not in (0, 1):
        raise ValueError("j must be 0 or 1")
    if not kappa >= 0:
        raise ValueError("kappa must be nonnegative")
    active = [p for p in (v0hat, v1hat) if not p.is_zero()]
    if not active:
        return 0.0

    n = model.n
    r_max = damping_cutoff(model, t, max(p.r_max for p in active))
    power = 2.0 * kappa + n - 1.0

    def integrand(r: np.ndarray) -> np.ndarray:
        kernels = kernel_arrays(model, r, t)
        if j == 0:
            w = kernels.k0 * v0hat.evaluate(r) + kernels.k1 * v1hat.evaluate(r)
        else:
            w = kernels.dtk0 * v0hat.evaluate(r) + kernels.dtk1 * v1hat.evaluate(r)
        return w**2 * r**power

    integral = adaptive_integral(integrand, radial_breakpoints(model, t, r_max), rtol=rtol)
    return math.sqrt(max(integral, 0.0) * unit_sphere_area(n) / (2.0 * math.pi) ** n)
