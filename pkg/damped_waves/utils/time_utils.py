#######################################################################
# Project: Damped Waves Module
# File: time_utils.py
# Description: Util functions for evaluation-time grids
# Author: AbigailWilliams1692
# Created: 2026-09-05
# Updated: 2026-10-03
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from typing import List, Sequence, Tuple

# Third-party Packages
import numpy as np


#######################################################################
# Util Functions
#######################################################################
def populate_times_in_between(
    start_time: float,
    end_time: float,
    count: int,
    spacing: str = "log",
) -> List[float]:
    """
    Populate a list of times between start_time and end_time (inclusive).

    :param start_time: The first time.
    :param end_time: The last time.
    :param count: Number of times, at least 2.
    :param spacing: "log" for geometric spacing, "linear" for uniform spacing.
    :return: List of strictly increasing times.
    """
    if count < 2:
        raise ValueError("count must be at least 2")
    if start_time >= end_time:
        raise ValueError("start_time must be before end_time")
    if spacing == "log":
        if start_time <= 0:
            raise ValueError("log spacing needs a positive start_time")
        times = np.geomspace(start_time, end_time, count)
    elif spacing == "linear":
        times = np.linspace(start_time, end_time, count)
    else:
        raise ValueError(f"Unknown spacing '{spacing}'")
    # Pin the endpoints exactly
    times[0], times[-1] = start_time, end_time
    return [float(t) for t in times]


def last_decades_window(times: Sequence[float], decades: float = 2.0) -> Tuple[float, float]:
    """
    Window covering the last ``decades`` decades of a time list.

    :param times: Increasing times.
    :param decades: Number of decades.
    :return: (t_lo, t_hi).
    """
    t_hi = float(times[-1])
    return t_hi / 10.0**decades, t_hi
