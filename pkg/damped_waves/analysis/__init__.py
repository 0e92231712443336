from damped_waves.analysis.rate_fit import (
    LogGrowthReport,
    RateFit,
    fit_rate,
    log_growth_check,
)
from damped_waves.analysis.weighted_norms import xt_norm, xt_profile
from damped_waves.analysis.verdicts import Verdict, compare

__all__ = [
    "LogGrowthReport",
    "RateFit",
    "fit_rate",
    "log_growth_check",
    "xt_norm",
    "xt_profile",
    "Verdict",
    "compare",
]
