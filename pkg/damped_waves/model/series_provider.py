#######################################################################
# Project: Damped Waves Module
# File: series_provider.py
# Description: Abstract base class for norm-history providers
# Author: AbigailWilliams1692
# Created: 2026-09-05
# Updated: 2026-10-12
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Optional, Sequence

# Local Packages
from damped_waves.model.exceptions import (
    QuantityNotFoundError,
    ReturnValueNotMatchedError,
)
from damped_waves.model.simulation_module import ModuleStatus, SimulationModule
from damped_waves.model.time_series import Quantity, TimeSeries
from damped_waves.utils.worker_utils import resolve_worker_count

QuantityMethod = Callable[[Quantity, float], float]


#######################################################################
# Series Provider Class
#######################################################################
class SeriesProvider(SimulationModule):
    """
    Abstract base class for providers that evaluate solution norms at given times.

    Subclasses register one method per quantity kind; ``fetch_value`` dispatches
    on the kind and checks the returned norm, ``fetch_series`` evaluates every
    time point independently and may fan them out over worker threads.
    """

    #################################################
    # Class Attributes
    #################################################
    _name: str = "SeriesProvider"
    mode: str = "abstract"

    #################################################
    # Constructor
    #################################################
    def __init__(
        self,
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
        workers: Optional[int] = None,
    ) -> None:
        """
        Initialize the series provider.

        :param instance_id: Unique identifier for this provider instance.
        :param logger: Logger instance for logging operations.
        :param log_level: Logging level for the provider.
        :param workers: Thread count for time points; None reads the environment.
        """
        super().__init__(instance_id=instance_id, logger=logger, log_level=log_level)
        self._workers = resolve_worker_count(workers)
        self._quantity_methods: Dict[str, QuantityMethod] = {}

    #################################################
    # Getter & Setter Methods
    #################################################
    def get_quantity_method(self, kind: str) -> Optional[QuantityMethod]:
        """
        Get the evaluation method registered for a quantity kind.

        :param kind: The quantity kind.
        :return: The method, or None.
        """
        return self._quantity_methods.get(kind)

    def update_quantity_methods(self, new_methods: Dict[str, QuantityMethod]) -> None:
        """
        Merge new quantity methods into the registry.

        :param new_methods: Mapping from quantity kind to evaluation method.
        """
        self._quantity_methods.update(new_methods)

    #################################################
    # Core Instance Method: Fetch Values
    #################################################
    def fetch_value(self, quantity: Quantity, t: float) -> float:
        """
        Evaluate one quantity at one time.

        :param quantity: The quantity descriptor.
        :param t: The evaluation time.
        :return: The nonnegative norm value.
        :raises QuantityNotFoundError: If no method is registered for the kind.
        :raises ReturnValueNotMatchedError: If the method returns a non-finite or negative value.
        """
        # Extract the corresponding quantity method
        method = self.get_quantity_method(quantity.kind)
        if method is None:
            raise QuantityNotFoundError(
                f"Provider '{self.mode}' has no method for quantity '{quantity.label}'."
            )

        # Evaluate
        value = float(method(quantity, t))

        # Check the value
        if not math.isfinite(value) or value < 0:
            raise ReturnValueNotMatchedError(
                f"Quantity '{quantity.label}' at t={t!r} evaluated to {value!r}."
            )
        return value

    def fetch_series(self, quantity: Quantity, times: Sequence[float]) -> TimeSeries:
        """
        Evaluate one quantity at every requested time.

        :param quantity: The quantity descriptor.
        :param times: Strictly increasing positive times.
        :return: TimeSeries: The norm history tagged with this provider's mode.
        """
        times = [float(t) for t in times]
        self.set_status(ModuleStatus.RUNNING)
        self._logger.info(
            f"Evaluating {quantity.label} at {len(times)} times in {self.mode} mode "
            f"with {self._workers} worker(s)."
        )
        try:
            if self._workers > 1 and len(times) > 1:
                with ThreadPoolExecutor(max_workers=self._workers) as executor:
                    values = list(executor.map(lambda t: self.fetch_value(quantity, t), times))
            else:
                values = [self.fetch_value(quantity, t) for t in times]
        except Exception:
            self.set_status(ModuleStatus.FAILED)
            raise
        self.set_status(ModuleStatus.COMPLETED)
        return TimeSeries(
            times=times,
            values=values,
            quantity=quantity.label,
            mode=self.mode,
            metadata=self.series_metadata(),
        )

    #################################################
    # Utility Methods
    #################################################
    def series_metadata(self) -> Dict[str, Any]:
        """
        Metadata attached to every produced series. Subclasses extend it.

        :return: Dict[str, Any]: Metadata.
        """
        return {"mode": self.mode}
