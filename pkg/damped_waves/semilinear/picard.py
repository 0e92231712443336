#######################################################################
# Project: Damped Waves Module
# File: picard.py
# Description: Picard iteration u_j = N(u_{j-1}) on stored Duhamel snapshots
# Author: AbigailWilliams1692
# Created: 2026-09-26
# Updated: 2026-10-15
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.analysis import xt_norm
from damped_waves.exponents import RateTable, predicted_rates
from damped_waves.kernels import ModelSpec, kernel_arrays
from damped_waves.linear import State
from damped_waves.model.exceptions import PicardDivergenceError
from damped_waves.model.time_series import TimeSeries
from damped_waves.semilinear.nonlinearity import Nonlinearity, StepperConfig
from damped_waves.semilinear.semilinear_engine import SemilinearEngine
from damped_waves.spectral import (
    GridSpec,
    SpectralField,
    forward_transform,
    inverse_transform,
    sobolev_seminorm,
)

ROUNDOFF_FLOOR = 1e-14
DIVERGENCE_PATIENCE = 2


#######################################################################
# Picard Result
#######################################################################
@dataclass(frozen=True)
class PicardResult:
    """
    Outcome of the iteration: X(T) norms of u_j - u_{j-1}, their successive
    ratios, and the last iterate at T.
    """

    diffs: List[Tuple[int, float]]
    ratios: List[float]
    converged: bool
    final: State
    bundles: List[Dict[str, TimeSeries]] = field(default_factory=list, compare=False)
    times: Tuple[float, ...] = ()


#######################################################################
# Snapshot Iterate
#######################################################################
@dataclass
class _Iterate:
    """Spectral coefficients of (u, u_t) at every snapshot time."""

    u: List[np.ndarray]
    ut: List[np.ndarray]

    def __sub__(self, other: "_Iterate") -> "_Iterate":
        return _Iterate(
            [a - b for a, b in zip(self.u, other.u)],
            [a - b for a, b in zip(self.ut, other.ut)],
        )


def _quantity_bundle(
    iterate: _Iterate, grid: GridSpec, times: np.ndarray, rates: RateTable
) -> Dict[str, TimeSeries]:
    """Rate-table quantities of an iterate, one series per quantity label."""
    bundle: Dict[str, TimeSeries] = {}
    for entry in rates.entries.values():
        values = []
        for U, Ut in zip(iterate.u, iterate.ut):
            fields = (SpectralField(grid, U), SpectralField(grid, Ut))
            total = sum(sobolev_seminorm(fields[j], kappa) ** 2 for j, kappa in entry.quantity.spectral_orders())
            values.append(math.sqrt(total))
        label = entry.quantity.label
        bundle[label] = TimeSeries(times, values, label, mode="grid")
    return bundle


#######################################################################
# Picard Iteration
#######################################################################
def picard_iterate(
    model: ModelSpec,
    nl: Nonlinearity,
    initial: State,
    T: float,
    j_max: int = 8,
    quadrature_points: int = 100,
    dealias: Optional[bool] = None,
    strict: bool = False,
    logger: Optional[logging.Logger] = None,
) -> PicardResult:
    """
    Iterate u_{-1} = 0, u_j = N(u_{j-1}) with
    N(u)(t) = linear flow of the data + int_0^t K1(t - s) f(u(s)) ds,
    the integral taken by the composite trapezoid rule on uniform snapshots.

    :param model: ModelSpec: The equation parameters.
    :param nl: Nonlinearity: The power nonlinearity.
    :param initial: State: Data at the start time.
    :param T: float: Final time, after initial.time.
    :param j_max: int: Number of iterates, at least 2.
    :param quadrature_points: int: Number of trapezoid intervals on [initial.time, T].
    :param dealias: Two-thirds truncation of f(u); None follows the nonlinearity default.
    :param strict: Raise PicardDivergenceError instead of reporting non-convergence.
    :param logger: Logger for progress and warnings.
    :return: PicardResult: Diffs, ratios, convergence flag, final iterate and bundles.
    """
    if not T > initial.time:
        raise ValueError(f"T={T} must exceed the initial time {initial.time}")
    if int(j_max) != j_max or j_max < 2:
        raise ValueError(f"j_max must be an integer >= 2, got {j_max}")
    if int(quadrature_points) != quadrature_points or quadrature_points < 1:
        raise ValueError(f"quadrature_points must be a positive integer, got {quadrature_points}")

    grid = initial.grid
    q = int(quadrature_points)
    h = (T - initial.time) / q
    times = initial.time + h * np.arange(q + 1)
    engine = SemilinearEngine(model, nl, StepperConfig(dt=h, dealias=dealias), logger=logger)
    log = engine.get_logger()
    rates = predicted_rates(model.sigma, model.n, 2, semilinear=True)

    # Kernels at every lag; the linear flow of the data uses them directly
    U0, Ut0 = forward_transform(initial.u).coefficients, forward_transform(initial.ut).coefficients
    k1_lags: List[np.ndarray] = []
    dtk1_lags: List[np.ndarray] = []
    linear = _Iterate([], [])
    for lag in range(q + 1):
        kernels = kernel_arrays(model, grid.wavenumber_magnitude, lag * h)
        k1_lags.append(kernels.k1)
        dtk1_lags.append(kernels.dtk1)
        linear.u.append(kernels.k0 * U0 + kernels.k1 * Ut0)
        linear.ut.append(kernels.dtk0 * U0 + kernels.dtk1 * Ut0)

    def apply_n(previous: _Iterate) -> _Iterate:
        F = [
            engine.nonlinear_coefficients(inverse_transform(SpectralField(grid, U)))
            for U in previous.u
        ]
        out = _Iterate([], [])
        for i in range(q + 1):
            du = np.zeros(grid.shape, dtype=complex)
            dut = np.zeros(grid.shape, dtype=complex)
            if i > 0:
                for k in range(i + 1):
                    weight = 0.5 * h if k in (0, i) else h
                    du += weight * k1_lags[i - k] * F[k]
                    dut += weight * dtk1_lags[i - k] * F[k]
            out.u.append(linear.u[i] + du)
            out.ut.append(linear.ut[i] + dut)
        return out

    log.info(f"Picard iteration: {j_max} iterates, {q} intervals on [{initial.time:g}, {T:g}]")
    zero = np.zeros(grid.shape, dtype=complex)
    previous = _Iterate([zero] * (q + 1), [zero] * (q + 1))
    diffs: List[Tuple[int, float]] = []
    ratios: List[float] = []
    bundles: List[Dict[str, TimeSeries]] = []
    converged = True
    growth_streak = 0

    for j in range(int(j_max)):
        current = apply_n(previous)
        bundle = _quantity_bundle(current - previous, grid, times, rates)
        diff = xt_norm(bundle, model.sigma, model.n, 2, rates=rates)
        bundles.append(bundle)
        diffs.append((j, diff))

        if j > 0:
            prev_diff = diffs[-2][1]
            scale = xt_norm(_quantity_bundle(current, grid, times, rates), model.sigma, model.n, 2, rates=rates)
            ratio = 0.0 if prev_diff <= ROUNDOFF_FLOOR * scale else diff / prev_diff
            ratios.append(ratio)
            growth_streak = growth_streak + 1 if ratio > 1.0 else 0
            if growth_streak >= DIVERGENCE_PATIENCE:
                converged = False
        log.debug(f"Picard j={j}: ||u_j - u_(j-1)||_X = {diff:.6e}")
        previous = current

    if not converged:
        message = f"Picard iteration is not contracting: ratios {', '.join(f'{r:.3g}' for r in ratios)}"
        if strict:
            raise PicardDivergenceError(message)
        log.warning(message)

    final = State(
        inverse_transform(SpectralField(grid, previous.u[-1])),
        inverse_transform(SpectralField(grid, previous.ut[-1])),
        float(times[-1]),
    )
    return PicardResult(diffs, ratios, converged, final, bundles, tuple(float(t) for t in times))
