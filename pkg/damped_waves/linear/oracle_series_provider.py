#######################################################################
# Project: Damped Waves Module
# File: oracle_series_provider.py
# Description: Norm histories on R^n from the radial quadrature oracle
# Author: AbigailWilliams1692
# Created: 2026-09-16
# Updated: 2026-10-12
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import logging
import math
from typing import Any, Dict, Optional, Sequence

# Local Packages
from damped_waves.kernels import ModelSpec
from damped_waves.linear.linear_engine import LinearEngine
from damped_waves.linear.state import RadialProfile
from damped_waves.model.exceptions import QuantityNotFoundError
from damped_waves.model.series_provider import SeriesProvider
from damped_waves.model.time_series import Quantity, TimeSeries


#######################################################################
# Oracle Series Provider
#######################################################################
class OracleSeries_Provider(SeriesProvider):
    """
    Evaluates L2-type norms of the R^n solution for radial data through
    Parseval and adaptive radial quadrature. L^m norms with m != 2 have no
    Parseval form and are rejected.
    """

    _name: str = "OracleSeries_Provider"
    mode: str = "oracle"

    def __init__(
        self,
        model: ModelSpec,
        v0hat: Optional[RadialProfile] = None,
        v1hat: Optional[RadialProfile] = None,
        instance_id: Optional[int] = None,
        logger: Optional[logging.Logger] = None,
        log_level: int = logging.INFO,
        workers: Optional[int] = None,
        **config: Any,
    ) -> None:
        """
        Initialize the oracle provider.

        :param model: ModelSpec: The equation parameters.
        :param v0hat: RadialProfile: Transform of the initial displacement.
        :param v1hat: RadialProfile: Transform of the initial velocity.
        :param config: Data meant for other modes; ignored.
        """
        super().__init__(
            instance_id=instance_id,
            logger=logger,
            log_level=log_level,
            workers=workers,
        )
        if v0hat is None and v1hat is None:
            raise ValueError("oracle mode needs at least one radial profile")
        self._model = model
        self._v0hat = v0hat or RadialProfile.zero()
        self._v1hat = v1hat or RadialProfile.zero()
        self._engine = LinearEngine(model, log_level=log_level)

        # Every L2 kind reduces to sums of (j, kappa) seminorms
        self.update_quantity_methods(
            {kind: self._seminorm_sum for kind in ("u_Lm", "ut_Lm", "grad_Lm", "energy_Lm", "hdot", "grad2_L2")}
        )

    def _seminorm_sum(self, quantity: Quantity, t: float) -> float:
        total = 0.0
        for j, kappa in quantity.spectral_orders():
            total += self._engine.radial_norm(j, kappa, self._v0hat, self._v1hat, t) ** 2
        return math.sqrt(total)

    def fetch_series(self, quantity: Quantity, times: Sequence[float]) -> TimeSeries:
        if not quantity.is_l2:
            raise QuantityNotFoundError(
                f"Oracle mode evaluates L2 quantities only, got '{quantity.label}'."
            )
        return super().fetch_series(quantity, times)

    def series_metadata(self) -> Dict[str, Any]:
        metadata = super().series_metadata()
        metadata["v0_profile"] = self._v0hat.kind
        metadata["v1_profile"] = self._v1hat.kind
        return metadata
