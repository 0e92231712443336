#######################################################################
# Project: Damped Waves Module
# File: worker_utils.py
# Description: Worker-count resolution for thread fan-out
# Author: AbigailWilliams1692
# Created: 2026-09-05
# Updated: 2026-09-05
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import os
from typing import Optional

WORKERS_ENV_VAR = "DAMPED_WAVES_WORKERS"


#######################################################################
# Util Functions
#######################################################################
def resolve_worker_count(workers: Optional[int] = None) -> int:
    """
    Resolve the number of worker threads.

    An explicit value wins; otherwise DAMPED_WAVES_WORKERS is read; otherwise the
    CPU count is used.

    :param workers: Explicit worker count.
    :return: A worker count of at least 1.
    """
    if workers is None:
        raw = os.environ.get(WORKERS_ENV_VAR, "").strip()
        if raw:
            try:
                workers = int(raw)
            except ValueError:
                raise ValueError(f"{WORKERS_ENV_VAR} must be an integer, got '{raw}'.")
        else:
            workers = os.cpu_count() or 1
    return max(1, int(workers))
