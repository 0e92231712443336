#######################################################################
# Project: Damped Waves Module
# File: thresholds.py
# Description: Critical exponents, admissible p-ranges and blow-up bounds
# Author: AbigailWilliams1692
# Created: 2026-09-20
# Updated: 2026-10-15
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

# Local Packages
from damped_waves.exponents.intervals import Interval, Number, _num
from damped_waves.model.exceptions import HypothesisError

Real = Union[int, float, str, Fraction]
HALF = Fraction(1, 2)


#######################################################################
# Regimes
#######################################################################
class RegimeTag(str, Enum):
    """The four damping regimes, split at sigma = 1/2 and sigma = 1."""

    HALF = "half"
    VISCO = "visco"
    PARABOLIC_LIKE = "parabolic_like"
    HYPERBOLIC_LIKE = "hyperbolic_like"


def regime_of(sigma: Real) -> RegimeTag:
    """
    Regime of a damping order.

    :param sigma: Damping order in (0,1].
    :return: RegimeTag: The regime.
    """
    s = _num(sigma)
    if not 0 < s <= 1:
        raise HypothesisError(f"sigma must lie in (0,1], got {sigma}")
    if s == HALF:
        return RegimeTag.HALF
    if s == 1:
        return RegimeTag.VISCO
    return RegimeTag.PARABOLIC_LIKE if s < HALF else RegimeTag.HYPERBOLIC_LIKE


def _check_dimension(n: int) -> None:
    if int(n) != n or n < 2:
        raise HypothesisError(f"n must be an integer >= 2, got {n}")


def _check_m(regime: RegimeTag, m: Number) -> None:
    if regime is RegimeTag.HALF:
        if not 1 < m <= 2:
            raise HypothesisError(f"m must lie in (1,2] at sigma=1/2, got {m}")
    elif m != 2:
        raise HypothesisError(f"m enters only at sigma=1/2; other regimes use m=2, got {m}")


def _dimension_violation(regime: RegimeTag, n: int) -> Optional[str]:
    """Message naming the violated dimension hypothesis, or None."""
    if regime in (RegimeTag.HALF, RegimeTag.PARABOLIC_LIKE) and n not in (2, 3, 4):
        label = "sigma=1/2" if regime is RegimeTag.HALF else "sigma in (0,1/2)"
        return f"global existence for {label} requires n in {{2,3,4}}, got n={n}"
    return None


def _threshold_formula(regime: RegimeTag, s: Number, n: int) -> Number:
    n_ = _num(n)
    if regime is RegimeTag.HALF:
        return 1 + 2 / (n_ - 1)
    if regime is RegimeTag.VISCO:
        return 1 + 3 / (n_ - 1)
    if regime is RegimeTag.PARABOLIC_LIKE:
        return 1 + 2 / (n_ - 2 * s)
    return 1 + (1 + 2 * s) / (n_ - 1)


#######################################################################
# Existence Threshold
#######################################################################
def existence_threshold(sigma: Real, n: int, m: Real = 2, strict: bool = True) -> Number:
    """
    Strict lower bound on p for small-data global existence.

    :param sigma: Damping order in (0,1]; int, str and Fraction input stay exact.
    :param n: Space dimension.
    :param m: Lebesgue exponent in (1,2]; only used at sigma = 1/2.
    :param strict: Enforce the dimension hypotheses (n in {2,3,4} for sigma <= 1/2).
    :return: The threshold, a Fraction for exact input.
    """
    regime = regime_of(sigma)
    _check_dimension(n)
    _check_m(regime, _num(m))
    if strict:
        violation = _dimension_violation(regime, int(n))
        if violation:
            raise HypothesisError(violation)
    return _threshold_formula(regime, _num(sigma), int(n))


#######################################################################
# Admissible Range
#######################################################################
@dataclass(frozen=True)
class RangeReport:
    """
    Admissible exponents for one (sigma, n, m).

    ``admissible`` is the integrability interval with every p at or below
    ``existence_threshold`` removed; ``note`` explains an empty result that
    comes from the dimension hypotheses rather than the intersection.
    """

    sigma: Number
    n: int
    m: Number
    existence_threshold: Number
    integrability_interval: Interval
    admissible: Interval
    regime_tag: RegimeTag
    note: Optional[str] = None


def integrability_interval(sigma: Real, n: int, m: Real = 2) -> Interval:
    """
    The [lower, n/(n - d)] range of p allowed by the Gagliardo-Nirenberg steps;
    a nonpositive denominator leaves it unbounded above.
    """
    regime = regime_of(sigma)
    s, m_, n_ = _num(sigma), _num(m), _num(n)
    if regime is RegimeTag.HALF:
        lo, d = m_, m_
    elif regime is RegimeTag.VISCO:
        lo, d = _num(2), _num(4)
    elif regime is RegimeTag.PARABOLIC_LIKE:
        lo, d = _num(2), _num(2)
    else:
        lo, d = _num(2), 4 * s
    hi = n_ / (n_ - d) if n_ - d > 0 else None
    return Interval.closed(lo, hi)


def admissible_range(sigma: Real, n: int, m: Real = 2) -> RangeReport:
    """
    Admissible p for global existence of small-data solutions.

    :param sigma: Damping order in (0,1].
    :param n: Space dimension, at least 2.
    :param m: Lebesgue exponent in (1,2]; must be 2 unless sigma = 1/2.
    :return: RangeReport: Threshold, integrability interval and their intersection.
    """
    regime = regime_of(sigma)
    _check_dimension(n)
    s, m_ = _num(sigma), _num(m)
    _check_m(regime, m_)
    n = int(n)

    threshold = _threshold_formula(regime, s, n)
    interval = integrability_interval(sigma, n, m)
    violation = _dimension_violation(regime, n)
    if violation:
        return RangeReport(s, n, m_, threshold, interval, Interval.empty_set(), regime, violation)

    admissible = interval & Interval.above(threshold)
    note = None if not admissible.is_empty() else "no p satisfies both constraints"
    return RangeReport(s, n, m_, threshold, interval, admissible, regime, note)


#######################################################################
# Blow-up Threshold
#######################################################################
@dataclass(frozen=True)
class BlowupThreshold:
    """
    Upper bound of the nonexistence range 1 < p <= value.

    A branch value of None means the branch gives no finite bound.
    """

    sigma: Number
    n: int
    value: Optional[Number]
    parabolic_branch: Optional[Number]
    hyperbolic_branch: Optional[Number]
    branches_agree: bool


def blowup_threshold(sigma: Real, n: int) -> BlowupThreshold:
    """
    Nonexistence bound for nonnegative data with positive mean.

    :param sigma: Damping order in (0,1].
    :param n: Space dimension, at least 1.
    :return: BlowupThreshold: 1+2/(n-2 sigma) for sigma <= 1/2, 1+2/(n-1) otherwise.
    """
    regime_of(sigma)
    if int(n) != n or n < 1:
        raise HypothesisError(f"n must be a positive integer, got {n}")
    s, n_ = _num(sigma), _num(int(n))
    parabolic = 1 + 2 / (n_ - 2 * s) if n_ > 2 * s else None
    hyperbolic = 1 + 2 / (n_ - 1) if n_ > 1 else None
    value = parabolic if s <= HALF else hyperbolic
    return BlowupThreshold(s, int(n), value, parabolic, hyperbolic, parabolic == hyperbolic)


#######################################################################
# Gap Report
#######################################################################
@dataclass(frozen=True)
class GapReport:
    """Existence and blow-up thresholds with the width of the range in between."""

    sigma: Number
    n: int
    existence_threshold: Number
    blowup_threshold: Number
    gap_width: Number


def gap_report(sigma: Real, n: int) -> GapReport:
    """
    Distance between the existence threshold and the blow-up bound.

    Zero for sigma <= 1/2; (2 sigma - 1)/(n - 1) above. The dimension
    hypotheses of the existence statements are not enforced here.

    :param sigma: Damping order in (0,1].
    :param n: Space dimension, at least 2.
    :return: GapReport: Both thresholds and the gap.
    """
    regime = regime_of(sigma)
    _check_dimension(n)
    existence = _threshold_formula(regime, _num(sigma), int(n))
    blowup = blowup_threshold(sigma, n).value
    assert blowup is not None
    return GapReport(_num(sigma), int(n), existence, blowup, existence - blowup)


#######################################################################
# Gagliardo-Nirenberg Exponent
#######################################################################
@dataclass(frozen=True)
class GNTheta:
    """theta = (n/k)(1/m - 1/q) and whether q is reachable by the inequality."""

    theta: Number
    admissible: bool
    q_upper: Optional[Number]


def gn_theta(n: int, k: Real, m: Real, q: Real) -> GNTheta:
    """
    Interpolation exponent of ||u||_q <= C ||u||_m^{1-theta} ||D^k u||_m^theta.

    :param n: Space dimension.
    :param k: Positive (possibly fractional) derivative order.
    :param m: Base exponent in [1,2].
    :param q: Target exponent, q >= m.
    :return: GNTheta: theta, admissibility and the upper bound nm/(n - km) (None if unbounded).
    """
    n_, k_, m_, q_ = _num(n), _num(k), _num(m), _num(q)
    if not k_ > 0:
        raise ValueError(f"k must be positive, got {k}")
    if not 1 <= m_ <= 2:
        raise ValueError(f"m must lie in [1,2], got {m}")
    if q_ < m_:
        raise ValueError(f"q must be at least m, got q={q} < m={m}")

    theta = (n_ / k_) * (1 / m_ - 1 / q_)
    upper = n_ * m_ / (n_ - k_ * m_) if n_ > k_ * m_ else None
    within = upper is None or q_ <= upper
    return GNTheta(theta, bool(within and 0 <= theta <= 1), upper)
