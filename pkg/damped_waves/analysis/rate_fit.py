#######################################################################
# Project: Damped Waves Module
# File: rate_fit.py
# Description: Log-log decay-rate regression and logarithmic-growth checks
# Author: AbigailWilliams1692
# Created: 2026-09-27
# Updated: 2026-10-11
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from typing import Optional, Tuple

# Third-party Packages
import numpy as np
from scipy import stats

# Local Packages
from damped_waves.model.exceptions import FitWindowError, NonPositiveSeriesError
from damped_waves.model.time_series import TimeSeries
from damped_waves.utils.time_utils import last_decades_window

MIN_FIT_POINTS = 5
LOG_BOUND_RATIO = 2.0


#######################################################################
# Result Types
#######################################################################
@dataclass(frozen=True)
class RateFit:
    """Least-squares line log(value) = intercept + slope * log(1+t) over a window."""

    slope: float
    intercept: float
    r_squared: float
    window: Tuple[float, float]
    points: int
    quantity: str = ""
    residual_rms: float = 0.0


@dataclass(frozen=True)
class LogGrowthReport:
    """Range of value / log(e+t) over a window; bounded when max/min <= 2."""

    ratio_min: float
    ratio_max: float
    bounded: bool
    window: Tuple[float, float]


#######################################################################
# Helper Functions
#######################################################################
def _windowed(series: TimeSeries, window: Optional[Tuple[float, float]]) -> Tuple[TimeSeries, Tuple[float, float]]:
    if len(series) == 0:
        raise FitWindowError(f"Series '{series.quantity}' is empty.")
    if window is None:
        window = last_decades_window(series.times)
    t_lo, t_hi = float(window[0]), float(window[1])
    restricted = series.restrict(t_lo, t_hi)
    if len(restricted) < MIN_FIT_POINTS:
        raise FitWindowError(
            f"Window [{t_lo:g}, {t_hi:g}] holds {len(restricted)} points of '{series.quantity}', "
            f"need at least {MIN_FIT_POINTS}."
        )
    if np.any(restricted.values <= 0):
        raise NonPositiveSeriesError(f"Series '{series.quantity}' has nonpositive values in the window.")
    return restricted, (t_lo, t_hi)


#######################################################################
# Fitting
#######################################################################
def fit_rate(series: TimeSeries, window: Optional[Tuple[float, float]] = None) -> RateFit:
    """
    Decay exponent of a norm history against (1+t).

    :param series: TimeSeries: Positive values.
    :param window: (t_lo, t_hi); defaults to the last two decades of the series.
    :return: RateFit: Slope, intercept, r^2 and the window used.
    """
    restricted, window = _windowed(series, window)
    x = np.log1p(restricted.times)
    y = np.log(restricted.values)
    result = stats.linregress(x, y)

    residuals = y - (result.intercept + result.slope * x)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot == 0.0:
        r_squared = 1.0 if ss_res <= 1e-28 * max(1.0, float(np.sum(y**2))) else 0.0
    else:
        r_squared = min(max(1.0 - ss_res / ss_tot, 0.0), 1.0)

    return RateFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        r_squared=r_squared,
        window=window,
        points=len(restricted),
        quantity=series.quantity,
        residual_rms=float(np.sqrt(ss_res / len(restricted))),
    )


def log_growth_check(series: TimeSeries, window: Optional[Tuple[float, float]] = None) -> LogGrowthReport:
    """
    Whether a history grows like log(e+t).

    :param series: TimeSeries: Positive values.
    :param window: (t_lo, t_hi); defaults to the whole series.
    :return: LogGrowthReport: Extremes of value / log(e+t) and the bounded flag.
    """
    if window is None and len(series):
        window = (float(series.times[0]), float(series.times[-1]))
    restricted, window = _windowed(series, window)
    ratios = restricted.values / np.log(np.e + restricted.times)
    ratio_min, ratio_max = float(ratios.min()), float(ratios.max())
    return LogGrowthReport(
        ratio_min=ratio_min,
        ratio_max=ratio_max,
        bounded=ratio_max / ratio_min <= LOG_BOUND_RATIO,
        window=window,
    )
