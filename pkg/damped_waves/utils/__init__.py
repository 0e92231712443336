from damped_waves.utils.time_utils import last_decades_window, populate_times_in_between
from damped_waves.utils.worker_utils import WORKERS_ENV_VAR, resolve_worker_count

__all__ = [
    "last_decades_window",
    "populate_times_in_between",
    "WORKERS_ENV_VAR",
    "resolve_worker_count",
]
