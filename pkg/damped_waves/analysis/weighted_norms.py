#######################################################################
# Project: Damped Waves Module
# File: weighted_norms.py
# Description: Decay-weighted X(t) norms of norm-history bundles
# Author: AbigailWilliams1692
# Created: 2026-09-27
# Updated: 2026-10-14
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from fractions import Fraction
from typing import Mapping, Optional, Union

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.exponents import RateTable, predicted_rates
from damped_waves.model.exceptions import MissingQuantityError, SeriesAlignmentError
from damped_waves.model.time_series import TimeSeries

Real = Union[int, float, str, Fraction]


#######################################################################
# X(t) Norm
#######################################################################
def xt_profile(
    bundle: Mapping[str, TimeSeries],
    sigma: Real,
    n: int,
    m: Real = 2,
    rates: Optional[RateTable] = None,
) -> TimeSeries:
    """
    Sum over the rate-table quantities of value(tau) / (1+tau)^exponent, at
    every stored time. Logarithmic cases are weighted by their exponent alone.

    :param bundle: Series keyed by rate-table key (``u_Lm``) or quantity label (``u_L2``).
    :param sigma: Damping order.
    :param n: Space dimension.
    :param m: Lebesgue exponent.
    :param rates: Rate table; defaults to the semilinear table of (sigma, n, m).
    :return: TimeSeries: The weighted sum.
    """
    if rates is None:
        rates = predicted_rates(sigma, n, m, semilinear=True)
    if not rates.entries:
        raise MissingQuantityError("X(t) norm needs a rate table with at least one quantity.")
    times: np.ndarray = np.empty(0)
    total: np.ndarray = np.empty(0)
    first = True
    for key, entry in rates.entries.items():
        label = entry.quantity.label
        series = bundle.get(key, bundle.get(label))
        if series is None:
            raise MissingQuantityError(f"X(t) norm needs '{label}' (rate key '{key}') in the bundle.")
        if first:
            times, total, first = series.times, np.zeros_like(series.times), False
        elif not np.array_equal(times, series.times):
            raise SeriesAlignmentError(f"Series '{label}' is sampled at different times.")
        weights = (1.0 + series.times) ** float(entry.exponent)
        total = total + series.values / weights
    return TimeSeries(times, total, "xt_profile", mode=next(iter(bundle.values())).mode)


def xt_norm(
    bundle: Mapping[str, TimeSeries],
    sigma: Real,
    n: int,
    m: Real = 2,
    rates: Optional[RateTable] = None,
) -> float:
    """
    sup over stored times of the weighted sum; see ``xt_profile``.

    :return: float: The largest weighted sum over the stored times, 0 when no times are stored.
    """
    profile = xt_profile(bundle, sigma, n, m, rates)
    return float(profile.values.max()) if len(profile) else 0.0
