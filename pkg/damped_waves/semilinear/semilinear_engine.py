#######################################################################
# Project: Damped Waves Module
# File: semilinear_engine.py
# Description: Exponential time differencing on the exact kernels, with blow-up detection
# Author: AbigailWilliams1692
# Created: 2026-09-24
# Updated: 2026-10-15
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.exponents import RateTable, predicted_rates
from damped_waves.kernels import ModelSpec
from damped_waves.linear import LinearEngine, State, measure
from damped_waves.model.exceptions import (
    FieldShapeError,
    HypothesisError,
    NonlinearOverflowError,
    StepLimitExceededError,
)
from damped_waves.model.simulation_module import ModuleStatus, SimulationModule
from damped_waves.model.time_series import Quantity, TimeSeries
from damped_waves.semilinear.nonlinearity import Nonlinearity, StepperConfig
from damped_waves.spectral import (
    RealField,
    SpectralField,
    forward_transform,
    inverse_transform,
)

BISECTION_FRACTION = 1.0 / 8.0


#######################################################################
# Run Outcome
#######################################################################
class RunStatus(str, Enum):
    COMPLETED = "completed"
    BLOWUP_DETECTED = "blowup_detected"


@dataclass(frozen=True)
class RunOutcome:
    """
    Result of a semilinear run. ``blowup_time_bracket`` is present exactly when
    the max-norm crossed the threshold.
    """

    status: RunStatus
    final_time: float
    blowup_time_bracket: Optional[Tuple[float, float]]
    series: Dict[str, TimeSeries] = field(default_factory=dict)
    final_state: Optional[State] = None
    initial_max_norm: float = 0.0
    peak_max_norm: float = 0.0
    threshold: float = math.inf
    steps: int = 0

    def __post_init__(self) -> None:
        blown_up = self.status is RunStatus.BLOWUP_DETECTED
        if blown_up != (self.blowup_time_bracket is not None):
            raise ValueError("blowup_time_bracket must be set exactly when blow-up was detected")


#######################################################################
# Series Recorder
#######################################################################
class _SeriesRecorder:
    """Collects per-step norms and the running X(t) norm."""

    BASE_QUANTITIES = ("u_L2", "u_Linf", "energy_L2")

    def __init__(self, rates: Optional[RateTable]) -> None:
        self._rates = rates
        labels = list(self.BASE_QUANTITIES)
        if rates is not None:
            labels += [e.quantity.label for e in rates.entries.values() if e.quantity.label not in labels]
        self._quantities = {label: Quantity.parse(label) for label in labels}
        self._times: List[float] = []
        self._values: Dict[str, List[float]] = {label: [] for label in labels}
        self._xt: List[float] = []

    def record(self, state: State) -> None:
        self._times.append(state.time)
        for label, quantity in self._quantities.items():
            self._values[label].append(measure(state, quantity))
        if self._rates is not None:
            weighted = sum(
                self._values[e.quantity.label][-1] / e.weight(state.time)
                for e in self._rates.entries.values()
            )
            self._xt.append(max(weighted, self._xt[-1] if self._xt else 0.0))

    def series(self, mode: str) -> Dict[str, TimeSeries]:
        bundle = {
            label: TimeSeries(self._times, values, label, mode=mode)
            for label, values in self._values.items()
        }
        if self._rates is not None:
            bundle["xt"] = TimeSeries(self._times, self._xt, "xt", mode=mode)
        return bundle


#######################################################################
# Semilinear Engine Class
#######################################################################
class SemilinearEngine(SimulationModule):
    """
    First-order exponential integrator for u_tt - Laplace u + mu (-Laplace)^sigma u_t = f(u):
    the linear part is propagated exactly and f(u) is frozen over each step.
    """

    #################################################
    # Class Attributes
    #################################################
    _name: str = "SemilinearEngine"

    #################################################
    # Constructor
    #################################################
    def __init__(
        self,
        model: ModelSpec,
        nonlinearity: Nonlinearity,
        config: StepperConfig,
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
    ) -> None:
        """
        Initialize the semilinear engine.

        :param model: ModelSpec: The equation parameters.
        :param nonlinearity: Nonlinearity: The power nonlinearity.
        :param config: StepperConfig: Step size, dealiasing and blow-up threshold.
        :param instance_id: Unique identifier for this engine instance.
        :param logger: Logger instance for logging operations.
        :param log_level: Logging level for the engine.
        """
        super().__init__(instance_id=instance_id, logger=logger, log_level=log_level)
        self._model = model
        self._nonlinearity = nonlinearity
        self._config = config
        self._dealias = config.resolve_dealias(nonlinearity)
        self._linear = LinearEngine(model, log_level=log_level)

    #################################################
    # Getter & Setter Methods
    #################################################
    def get_model(self) -> ModelSpec:
        return self._model

    def get_nonlinearity(self) -> Nonlinearity:
        return self._nonlinearity

    def get_config(self) -> StepperConfig:
        return self._config

    def get_linear_engine(self) -> LinearEngine:
        return self._linear

    def is_dealiased(self) -> bool:
        return self._dealias

    #################################################
    # Core Instance Method: Step
    #################################################
    def nonlinear_coefficients(self, u: RealField) -> np.ndarray:
        """
        Coefficients of f(u), truncated by the two-thirds rule when dealiasing.

        :param u: RealField: The displacement.
        :return: np.ndarray: Spectral coefficients of f(u).
        """
        F = forward_transform(self._nonlinearity.apply(u)).coefficients
        if self._dealias:
            F = F * u.grid.two_thirds_mask
        return F

    def etd_step(self, s: State, dt: Optional[float] = None, nonlinear_scale: float = 1.0) -> State:
        """
        One step of length dt:
        U <- K0 U + K1 U_t + (int_0^dt K1) F and U_t <- dK0 U + dK1 U_t + K1(dt) F.

        :param s: State: The current state.
        :param dt: float: Step length, the configured dt by default.
        :param nonlinear_scale: float: Factor on f(u); 0 reduces the step to exact propagation.
        :return: State: The state at s.time + dt.
        """
        dt = self._config.dt if dt is None else float(dt)
        if not dt > 0:
            raise ValueError(f"dt must be positive, got {dt}")
        kernels = self._linear.step_kernels(s.grid, dt, with_integral=True)
        u_next, ut_next = self._linear.advance_spectral(
            forward_transform(s.u), forward_transform(s.ut), kernels
        )
        if nonlinear_scale != 0.0:
            F = nonlinear_scale * self.nonlinear_coefficients(s.u)
            u_next = u_next + kernels.int_k1 * F
            ut_next = ut_next + kernels.k1 * F
        if not (np.all(np.isfinite(u_next)) and np.all(np.isfinite(ut_next))):
            raise NonlinearOverflowError(f"non-finite coefficients in the step to t={s.time + dt:g}")
        try:
            return State(
                inverse_transform(SpectralField(s.grid, u_next)),
                inverse_transform(SpectralField(s.grid, ut_next)),
                s.time + dt,
            )
        except FieldShapeError as exc:
            # finite coefficients whose physical values overflow
            raise NonlinearOverflowError(f"non-finite state after step to t={s.time + dt:g}") from exc

    #################################################
    # Core Instance Method: Run
    #################################################
    def _crosses(self, s: State, dt: float, threshold: float) -> Tuple[bool, Optional[State]]:
        try:
            nxt = self.etd_step(s, dt)
        except NonlinearOverflowError:
            return True, None
        return nxt.u.max_norm() > threshold, nxt

    def _bracket_blowup(self, s: State, dt: float, threshold: float) -> Tuple[float, float]:
        """Bisect the failing step until the crossing time is known within dt/8."""
        lo, hi = 0.0, dt
        while hi - lo > BISECTION_FRACTION * dt:
            mid = 0.5 * (lo + hi)
            crossed, _ = self._crosses(s, mid, threshold)
            if crossed:
                hi = mid
            else:
                lo = mid
        return s.time + lo, s.time + hi

    def _rate_table(self) -> Optional[RateTable]:
        try:
            return predicted_rates(self._model.sigma, self._model.n, 2, semilinear=True)
        except HypothesisError:
            return None

    def run(self, initial: State, T: float) -> RunOutcome:
        """
        Step from initial.time to T, or until the max-norm exceeds the blow-up threshold.

        :param initial: State: Initial data.
        :param T: float: Final time, after initial.time.
        :return: RunOutcome: Status, blow-up bracket and recorded series.
        """
        if not T > initial.time:
            raise ValueError(f"T={T} must exceed the initial time {initial.time}")
        scale = max(initial.u.max_norm(), initial.ut.max_norm())
        threshold = self._config.resolve_threshold(scale)
        if not threshold > initial.u.max_norm():
            raise ValueError(f"blow-up threshold {threshold:g} does not exceed the initial max-norm")

        self.set_status(ModuleStatus.RUNNING)
        self._logger.info(
            f"Run: n={self._model.n}, sigma={self._model.sigma}, mu={self._model.mu}, "
            f"p={self._nonlinearity.p} ({self._nonlinearity.variant.value}), dt={self._config.dt}, "
            f"T={T}, dealias={self._dealias}, threshold={threshold:.3e}"
        )
        recorder = _SeriesRecorder(self._rate_table())
        recorder.record(initial)
        state, steps = initial, 0
        initial_max = peak = initial.u.max_norm()
        end_tolerance = 1e-12 * max(T, 1.0)

        while T - state.time > end_tolerance:
            if steps >= self._config.max_steps:
                self.set_status(ModuleStatus.FAILED)
                self._logger.error(f"Step limit {self._config.max_steps} reached at t={state.time:g}")
                raise StepLimitExceededError(
                    f"max_steps={self._config.max_steps} exhausted at t={state.time:g} < T={T:g}"
                )
            dt = min(self._config.dt, T - state.time)
            crossed, nxt = self._crosses(state, dt, threshold)
            if crossed:
                bracket = self._bracket_blowup(state, dt, threshold)
                self.set_status(ModuleStatus.COMPLETED)
                self._logger.warning(f"Blow-up detected: t* in [{bracket[0]:.6g}, {bracket[1]:.6g}]")
                return RunOutcome(
                    status=RunStatus.BLOWUP_DETECTED,
                    final_time=state.time,
                    blowup_time_bracket=bracket,
                    series=recorder.series("grid"),
                    final_state=state,
                    initial_max_norm=initial_max,
                    peak_max_norm=peak,
                    threshold=threshold,
                    steps=steps,
                )
            assert nxt is not None
            state, steps = nxt, steps + 1
            peak = max(peak, state.u.max_norm())
            recorder.record(state)

        self.set_status(ModuleStatus.COMPLETED)
        self._logger.info(f"Run completed at t={state.time:g} after {steps} steps.")
        return RunOutcome(
            status=RunStatus.COMPLETED,
            final_time=state.time,
            blowup_time_bracket=None,
            series=recorder.series("grid"),
            final_state=state,
            initial_max_norm=initial_max,
            peak_max_norm=peak,
            threshold=threshold,
            steps=steps,
        )


#######################################################################
# Module-level Operations
#######################################################################
def etd_step(model: ModelSpec, nl: Nonlinearity, s: State, cfg: StepperConfig) -> State:
    """One exponential step of length cfg.dt; see ``SemilinearEngine.etd_step``."""
    return SemilinearEngine(model, nl, cfg).etd_step(s)


def run(model: ModelSpec, nl: Nonlinearity, initial: State, cfg: StepperConfig, T: float) -> RunOutcome:
    """Semilinear run to T; see ``SemilinearEngine.run``."""
    return SemilinearEngine(model, nl, cfg).run(initial, T)
