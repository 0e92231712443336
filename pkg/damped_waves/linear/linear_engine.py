#######################################################################
# Project: Damped Waves Module
# File: linear_engine.py
# Description: Exact diagonal propagation of the linear damped equation
# Author: AbigailWilliams1692
# Created: 2026-09-14
# Updated: 2026-10-14
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
import threading
from collections import OrderedDict
from typing import Optional, Tuple

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.kernels import KernelArrays, ModelSpec, kernel_arrays
from damped_waves.linear.radial_quadrature import radial_norm as _radial_norm
from damped_waves.linear.state import RadialProfile, State
from damped_waves.model.simulation_module import SimulationModule
from damped_waves.spectral import (
    GridSpec,
    SpectralField,
    forward_transform,
    inverse_transform,
    sobolev_seminorm,
)

KERNEL_CACHE_SIZE = 8


#######################################################################
# Linear Engine Class
#######################################################################
class LinearEngine(SimulationModule):
    """
    Propagates (u, u_t) exactly, mode by mode, with the fundamental kernels:
    U(t) = K0 U + K1 U_t and U_t(t) = dK0 U + dK1 U_t.
    """

    #################################################
    # Class Attributes
    #################################################
    _name: str = "LinearEngine"

    #################################################
    # Constructor
    #################################################
    def __init__(
        self,
        model: ModelSpec,
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
    ) -> None:
        """
        Initialize the linear engine.

        :param model: ModelSpec: The equation parameters.
        :param instance_id: Unique identifier for this engine instance.
        :param logger: Logger instance for logging operations.
        :param log_level: Logging level for the engine.
        """
        super().__init__(instance_id=instance_id, logger=logger, log_level=log_level)
        self._model = model
        self._kernel_cache: "OrderedDict[Tuple[GridSpec, float, bool], KernelArrays]" = OrderedDict()
        self._cache_lock = threading.Lock()

    #################################################
    # Getter & Setter Methods
    #################################################
    def get_model(self) -> ModelSpec:
        """
        Get the equation parameters.

        :return: ModelSpec: The model.
        """
        return self._model

    #################################################
    # Core Instance Method: Kernels
    #################################################
    def step_kernels(self, grid: GridSpec, dt: float, with_integral: bool = False) -> KernelArrays:
        """
        Kernel arrays over the grid lattice for a step of length dt, cached for
        repeated fixed-size steps.

        :param grid: GridSpec: The lattice.
        :param dt: float: Step length.
        :param with_integral: bool: Also compute the integral of K1 over the step.
        :return: KernelArrays: Kernels shaped like the grid.
        """
        key = (grid, float(dt), with_integral)
        with self._cache_lock:
            cached = self._kernel_cache.get(key)
            if cached is not None:
                self._kernel_cache.move_to_end(key)
                return cached
        kernels = kernel_arrays(
            self._model,
            grid.wavenumber_magnitude,
            dt,
            h_for_integral=dt if with_integral else None,
        )
        with self._cache_lock:
            self._kernel_cache[key] = kernels
            while len(self._kernel_cache) > KERNEL_CACHE_SIZE:
                self._kernel_cache.popitem(last=False)
        return kernels

    #################################################
    # Core Instance Method: Propagate
    #################################################
    def advance_spectral(
        self, U: SpectralField, Ut: SpectralField, kernels: KernelArrays
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Free evolution of the coefficient pair over one kernel step.

        :return: (U(t), U_t(t)) coefficient arrays.
        """
        u_next = kernels.k0 * U.coefficients + kernels.k1 * Ut.coefficients
        ut_next = kernels.dtk0 * U.coefficients + kernels.dtk1 * Ut.coefficients
        return u_next, ut_next

    def propagate(self, s: State, t_target: float) -> State:
        """
        Exact linear propagation from s.time to t_target.

        :param s: State: The starting state.
        :param t_target: float: Target time, not before s.time.
        :return: State: The state at t_target.
        """
        if t_target < s.time:
            raise ValueError(f"t_target={t_target} precedes the state time {s.time}")
        dt = t_target - s.time
        if dt == 0:
            return s
        kernels = self.step_kernels(s.grid, dt)
        u_next, ut_next = self.advance_spectral(
            forward_transform(s.u), forward_transform(s.ut), kernels
        )
        return State(
            inverse_transform(SpectralField(s.grid, u_next)),
            inverse_transform(SpectralField(s.grid, ut_next)),
            float(t_target),
        )

    #################################################
    # Core Instance Method: Diagnostics
    #################################################
    def frequency_split(self, s: State, cutoff: float) -> Tuple[State, State]:
        """
        Sharp split of the coefficients at |xi| = cutoff; the low part keeps
        |xi| <= cutoff and low + high reconstructs s.

        :param s: State: The state to split.
        :param cutoff: float: Positive cutoff radius.
        :return: (low, high) states.
        """
        low, high = frequency_split(s, cutoff)
        low_count = int(np.count_nonzero(s.grid.wavenumber_magnitude <= cutoff))
        self._logger.debug(
            f"Split at |xi|={cutoff:g}: {low_count} low modes, "
            f"{s.grid.wavenumber_magnitude.size - low_count} high modes."
        )
        return low, high

    @staticmethod
    def energy(s: State) -> float:
        """E = ||u_t||^2 + ||grad u||^2, the dissipated energy."""
        return (
            sobolev_seminorm(forward_transform(s.ut), 0.0) ** 2
            + sobolev_seminorm(forward_transform(s.u), 1.0) ** 2
        )

    def radial_norm(
        self,
        j: int,
        kappa: float,
        v0hat: RadialProfile,
        v1hat: RadialProfile,
        t: float,
    ) -> float:
        """
        Norm of d_t^j v(t) in H-dot^kappa(R^n) for radial data, by quadrature.
        """
        value = _radial_norm(self._model, j, kappa, v0hat, v1hat, t)
        self._logger.debug(f"radial_norm(j={j}, kappa={kappa:g}, t={t:g}) = {value:.6e}")
        return value


#######################################################################
# Module-level Operations
#######################################################################
def propagate(model: ModelSpec, s: State, t_target: float) -> State:
    """Exact linear propagation; see ``LinearEngine.propagate``."""
    return LinearEngine(model).propagate(s, t_target)


def frequency_split(s: State, cutoff: float) -> Tuple[State, State]:
    """Sharp low/high frequency split; the model does not enter."""
    if not cutoff > 0:
        raise ValueError("cutoff must be positive")
    low_mask = s.grid.wavenumber_magnitude <= cutoff
    U, Ut = forward_transform(s.u), forward_transform(s.ut)
    low = State(inverse_transform(U * low_mask), inverse_transform(Ut * low_mask), s.time)
    high = State(inverse_transform(U * ~low_mask), inverse_transform(Ut * ~low_mask), s.time)
    return low, high


def wrap_time(grid: GridSpec, data_radius: float) -> float:
    """
    Time after which a unit-speed front starting at radius data_radius reaches the
    box boundary and the periodic solution stops mimicking R^n.
    """
    return max(grid.box_length / 2.0 - data_radius, 0.0)
