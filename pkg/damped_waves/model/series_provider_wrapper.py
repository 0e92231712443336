#######################################################################
# Project: Damped Waves Module
# File: series_provider_wrapper.py
# Description: Wrapper class for switching between series providers by mode
# Author: AbigailWilliams1692
# Created: 2026-09-06
# Updated: 2026-10-12
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
from typing import Any, Dict, Optional, Sequence, Type

# Local Packages
from damped_waves.model.exceptions import (
    DampedWavesError,
    SeriesProviderInitializationError,
    SeriesProviderNotFoundError,
)
from damped_waves.model.series_provider import SeriesProvider
from damped_waves.model.simulation_module import SimulationModule
from damped_waves.model.time_series import Quantity, TimeSeries


#######################################################################
# Series Provider Wrapper Class
#######################################################################
class SeriesProvider_Wrapper(SimulationModule):
    """
    Wrapper class for evaluating the same quantities through interchangeable
    providers (for example a periodic grid and a radial quadrature oracle).

    The wrapper mimics the SeriesProvider interface and builds the provider
    registered for the selected mode from its own configuration.
    """

    #################################################
    # Class Attributes
    #################################################
    _name: str = "SeriesProvider_Wrapper"

    #################################################
    # Constructor
    #################################################
    def __init__(
        self,
        mode: str,
        mode_mapping: Dict[str, Type[SeriesProvider]],
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
        **config: Any,
    ) -> None:
        """
        Initialize the wrapper and its provider.

        :param mode: The mode whose provider evaluates series.
        :param mode_mapping: Mapping from mode name to provider class.
        :param instance_id: Unique identifier for this wrapper instance.
        :param logger: Logger instance for logging operations.
        :param log_level: Logging level for the wrapper.
        :param config: Keyword arguments forwarded to the provider constructor.
        """
        super().__init__(instance_id=instance_id, logger=logger, log_level=log_level)

        ## Valid modes
        self._mode_mapping: Dict[str, Type[SeriesProvider]] = dict(mode_mapping)

        ## Other attributes
        self._config: Dict[str, Any] = dict(config)
        self._mode = mode
        self._provider = self._initialize_provider_instance(mode=mode)

    #################################################
    # Getter & Setter Methods
    #################################################
    def get_mode(self) -> str:
        """
        Get the current mode.

        :return: The current mode name.
        """
        return self._mode

    def get_valid_modes(self) -> Sequence[str]:
        """
        Get the registered mode names.

        :return: The registered mode names.
        """
        return tuple(self._mode_mapping)

    #################################################
    # Provider Management Methods
    #################################################
    def switch_mode(self, mode: str) -> None:
        """
        Switch to another registered mode and rebuild the provider.

        :param mode: The mode name.
        """
        if mode == self._mode:
            raise ValueError(f"Mode '{mode}' is already the current mode.")
        self._provider = self._initialize_provider_instance(mode=mode)
        self._mode = mode
        self._logger.debug(f"Switched series provider to mode '{mode}'.")

    def _initialize_provider_instance(self, mode: str) -> SeriesProvider:
        """
        Build the provider registered for a mode.

        :param mode: The mode name.
        :return: The initialized provider instance.
        """
        # Get the provider class from the mapping
        provider_class = self._mode_mapping.get(mode)
        if provider_class is None:
            raise SeriesProviderNotFoundError(
                f"No series provider registered for mode '{mode}'; "
                f"valid modes are {sorted(self.get_valid_modes())}."
            )

        # Initialize the provider instance
        try:
            return provider_class(log_level=self.get_log_level(), **self._config)
        except DampedWavesError:
            raise
        except Exception as e:
            raise SeriesProviderInitializationError(
                f"Failed to initialize series provider for mode '{mode}'. Error: {e}"
            ) from e

    #################################################
    # Core Instance Method: Fetch Series
    #################################################
    def fetch_series(self, quantity: Quantity, times: Sequence[float]) -> TimeSeries:
        """
        Evaluate one quantity at every requested time through the current provider.

        :param quantity: The quantity descriptor.
        :param times: Strictly increasing positive times.
        :return: TimeSeries: The norm history.
        """
        return self._provider.fetch_series(quantity=quantity, times=times)
