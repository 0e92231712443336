#######################################################################
# Project: Damped Waves Module
# File: kernel_values.py
# Description: Stable evaluation of the fundamental Fourier kernels
# Author: AbigailWilliams1692
# Created: 2026-09-11
# Updated: 2026-10-14
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from typing import Optional

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.kernels.characteristic_roots import (
    RootArrays,
    RootRegime,
    root_arrays,
)
from damped_waves.kernels.model_spec import ModelSpec

SERIES_CUT = 1e-3
TAYLOR_TERMS = 30
SEPARATION_RATIO = 0.1


#######################################################################
# Data Classes
#######################################################################
@dataclass(frozen=True)
class KernelValues:
    """
    The five kernel scalars at one (r, t): K0 and K1 solve
    w'' + mu r^{2 sigma} w' + r^2 w = 0 with (w, w')(0) = (1, 0) and (0, 1).
    ``int_k1`` is the integral of K1 over [0, h].
    """

    k0: float
    k1: float
    dtk0: float
    dtk1: float
    int_k1: float
    t: float


@dataclass(frozen=True)
class KernelArrays:
    """
    Kernel scalars over an array of frequency magnitudes at one time.
    """

    k0: np.ndarray
    k1: np.ndarray
    dtk0: np.ndarray
    dtk1: np.ndarray
    int_k1: Optional[np.ndarray]
    t: float


#######################################################################
# Helper Functions
#######################################################################
def _psi(z: np.ndarray) -> np.ndarray:
    """(1 - exp(-z))/z for z >= 0, with a five-term series near 0."""
    small = np.abs(z) < SERIES_CUT
    z_safe = np.where(small, 1.0, z)
    series = 1.0 - z / 2.0 + z**2 / 6.0 - z**3 / 24.0 + z**4 / 120.0
    return np.where(small, series, -np.expm1(-z_safe) / z_safe)


def _exp_integral(lam: np.ndarray, h: float) -> np.ndarray:
    """Integral of exp(lam s) over [0, h], i.e. expm1(lam h)/lam."""
    small = lam == 0.0
    lam_safe = np.where(small, 1.0, lam)
    return np.where(small, h, np.expm1(lam_safe * h) / lam_safe)


def _kernels_at(roots: RootArrays, t: float) -> tuple:
    shape = roots.r.shape
    k0 = np.ones(shape)
    k1 = np.full(shape, float(t))
    dtk0 = np.zeros(shape)
    dtk1 = np.ones(shape)
    r2 = roots.r**2

    # Real and double roots: K1 = t exp(lambda_plus t) psi(gap t)
    mask = roots.mask(RootRegime.REAL) | roots.mask(RootRegime.DEGENERATE)
    if np.any(mask):
        lp = roots.lambda_plus.real[mask]
        lm = roots.lambda_minus.real[mask]
        exp_lm = np.exp(lm * t)
        k1_m = t * np.exp(lp * t) * _psi(roots.gap[mask] * t)
        k1[mask] = k1_m
        dtk1[mask] = exp_lm + lp * k1_m
        k0[mask] = exp_lm - lm * k1_m
        dtk0[mask] = -r2[mask] * k1_m

    # Complex pair: damped oscillation
    mask = roots.mask(RootRegime.COMPLEX)
    if np.any(mask):
        beta = roots.damping[mask] / 2.0
        alpha = roots.gap[mask] / 2.0
        envelope = np.exp(-beta * t)
        sine_part = t * np.sinc(alpha * t / np.pi)
        cosine_part = np.cos(alpha * t)
        k1_m = envelope * sine_part
        k1[mask] = k1_m
        dtk1[mask] = envelope * (cosine_part - beta * sine_part)
        k0[mask] = envelope * (cosine_part + beta * sine_part)
        dtk0[mask] = -r2[mask] * k1_m

    return k0, k1, dtk0, dtk1


def _integral_k1(roots: RootArrays, h: float) -> np.ndarray:
    """
    Integral of K1 over [0, h] in closed form, split by where each form is
    cancellation free.
    """
    r = roots.r
    a = roots.damping
    result = np.empty(r.shape)
    zero = roots.mask(RootRegime.ZERO)
    result[zero] = h**2 / 2.0
    rest = ~zero
    if not np.any(rest):
        return result

    # Short steps: Taylor series of K1 from the recurrence of the ODE
    series = rest & (np.maximum(a, r) * h <= 1.0)
    if np.any(series):
        A = a[series] * h
        B = (r[series] * h) ** 2
        d_prev = np.zeros(A.shape)
        d_curr = np.ones(A.shape)
        total = d_curr / 2.0
        for k in range(TAYLOR_TERMS):
            d_next = -(A * (k + 1) * d_curr + B * d_prev) / ((k + 2) * (k + 1))
            total = total + d_next / (k + 3)
            d_prev, d_curr = d_curr, d_next
        result[series] = h * h * total

    # Well separated real roots: divided difference of exponential integrals
    real = roots.mask(RootRegime.REAL)
    separated = (
        rest
        & ~series
        & real
        & (roots.gap >= SEPARATION_RATIO * np.abs(roots.lambda_minus.real))
    )
    if np.any(separated):
        lp = roots.lambda_plus.real[separated]
        lm = roots.lambda_minus.real[separated]
        result[separated] = (
            _exp_integral(lp, h) - _exp_integral(lm, h)
        ) / roots.gap[separated]

    # Oscillatory or nearly double roots: (1 - K0(h)) / r^2
    remaining = rest & ~series & ~separated
    if np.any(remaining):
        sub = RootArrays(
            r=r[remaining],
            damping=a[remaining],
            gap=roots.gap[remaining],
            discriminant=roots.discriminant[remaining],
            lambda_plus=roots.lambda_plus[remaining],
            lambda_minus=roots.lambda_minus[remaining],
            regime=roots.regime[remaining],
        )
        k0_h = _kernels_at(sub, h)[0]
        result[remaining] = (1.0 - k0_h) / sub.r**2

    return result


#######################################################################
# Kernel Evaluation
#######################################################################
def kernel_arrays(
    model: ModelSpec,
    r: np.ndarray,
    t: float,
    h_for_integral: Optional[float] = None,
) -> KernelArrays:
    """
    Vectorized kernel scalars at time t for every entry of r.

    :param model: ModelSpec: The equation parameters.
    :param r: np.ndarray: Nonnegative frequency magnitudes.
    :param t: float: Time t >= 0.
    :param h_for_integral: Upper limit of the K1 integral, or None to skip it.
    :return: KernelArrays: The kernel scalars.
    """
    if not t >= 0:
        raise ValueError("t must be nonnegative")
    roots = root_arrays(model, r)
    k0, k1, dtk0, dtk1 = _kernels_at(roots, float(t))
    int_k1 = None
    if h_for_integral is not None:
        if not h_for_integral >= 0:
            raise ValueError("h_for_integral must be nonnegative")
        int_k1 = _integral_k1(roots, float(h_for_integral))
    return KernelArrays(k0=k0, k1=k1, dtk0=dtk0, dtk1=dtk1, int_k1=int_k1, t=float(t))


def kernel_values(
    model: ModelSpec,
    r: float,
    t: float,
    h_for_integral: float = 0.0,
) -> KernelValues:
    """
    Kernel scalars at one frequency magnitude and time.

    :param model: ModelSpec: The equation parameters.
    :param r: float: |xi| >= 0.
    :param t: float: Time t >= 0.
    :param h_for_integral: float: Upper limit of the K1 integral.
    :return: KernelValues: The five kernel scalars.
    """
    arrays = kernel_arrays(model, np.array([r], dtype=float), t, h_for_integral)
    assert arrays.int_k1 is not None
    return KernelValues(
        k0=float(arrays.k0[0]),
        k1=float(arrays.k1[0]),
        dtk0=float(arrays.dtk0[0]),
        dtk1=float(arrays.dtk1[0]),
        int_k1=float(arrays.int_k1[0]),
        t=float(t),
    )


def ode_residual(model: ModelSpec, r: float, t: float, dt_fd: float) -> float:
    """
    Normalized residual of w'' + mu r^{2 sigma} w' + r^2 w = 0 for K0 and K1.

    w'' is the centered difference of the exact derivatives at t +- dt_fd.

    :param model: ModelSpec: The equation parameters.
    :param r: float: |xi| >= 0.
    :param t: float: Time with t >= dt_fd.
    :param dt_fd: float: Finite-difference step, positive.
    :return: float: max residual over K0, K1 divided by r^2 + mu r^{2 sigma} + 1.
    """
    if not (dt_fd > 0 and t >= dt_fd):
        raise ValueError("ode_residual needs t >= dt_fd > 0")
    damping = float(model.mu) * r ** (2.0 * model.sigma_float) if r > 0 else 0.0
    ahead = kernel_values(model, r, t + dt_fd)
    behind = kernel_values(model, r, t - dt_fd)
    here = kernel_values(model, r, t)
    residuals = []
    for w, dw, dw_ahead, dw_behind in (
        (here.k0, here.dtk0, ahead.dtk0, behind.dtk0),
        (here.k1, here.dtk1, ahead.dtk1, behind.dtk1),
    ):
        d2w = (dw_ahead - dw_behind) / (2.0 * dt_fd)
        residuals.append(abs(d2w + damping * dw + r**2 * w))
    return max(residuals) / (r**2 + damping + 1.0)
