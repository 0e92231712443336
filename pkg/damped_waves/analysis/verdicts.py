#######################################################################
# Project: Damped Waves Module
# File: verdicts.py
# Description: Measured-versus-predicted rate verdicts
# Author: AbigailWilliams1692
# Created: 2026-09-28
# Updated: 2026-10-09
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from typing import Dict, Tuple

# Local Packages
from damped_waves.analysis.rate_fit import RateFit

TOLERANCE_SLACK = 1e-12


#######################################################################
# Verdict
#######################################################################
@dataclass(frozen=True)
class Verdict:
    """One comparison of a fitted slope against a predicted exponent."""

    quantity: str
    predicted: float
    measured: float
    tol: float
    passed: bool
    one_sided: bool
    window: Tuple[float, float]

    def as_row(self) -> Dict[str, object]:
        """Row of the ``quantity,predicted,measured,tol,pass`` table."""
        return {
            "quantity": self.quantity,
            "predicted": self.predicted,
            "measured": self.measured,
            "tol": self.tol,
            "pass": self.passed,
        }


def compare(fit: RateFit, predicted: float, tol: float, one_sided: bool = False) -> Verdict:
    """
    Pass iff |slope - predicted| <= tol, or slope <= predicted + tol when one-sided
    (decay at least as fast as the bound).

    :param fit: RateFit: The measured slope.
    :param predicted: float: The predicted exponent.
    :param tol: float: Positive tolerance.
    :param one_sided: bool: Accept faster decay than predicted.
    :return: Verdict: Both numbers, the window and the outcome.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    predicted = float(predicted)
    if one_sided:
        passed = fit.slope <= predicted + tol + TOLERANCE_SLACK
    else:
        passed = abs(fit.slope - predicted) <= tol + TOLERANCE_SLACK
    return Verdict(
        quantity=fit.quantity,
        predicted=predicted,
        measured=fit.slope,
        tol=float(tol),
        passed=bool(passed),
        one_sided=one_sided,
        window=fit.window,
    )
