"""
Tests for rate fitting, verdicts, X(t) norms and time/worker utilities.
"""

from fractions import Fraction

import numpy as np
import pytest

from damped_waves.analysis import compare, fit_rate, log_growth_check, xt_norm, xt_profile
from damped_waves.exponents import RateTable, RegimeTag
from damped_waves.model.exceptions import (
    FitWindowError,
    MissingQuantityError,
    NonPositiveSeriesError,
    SeriesAlignmentError,
)
from damped_waves.model.time_series import TimeSeries
from damped_waves.utils import (
    WORKERS_ENV_VAR,
    last_decades_window,
    populate_times_in_between,
    resolve_worker_count,
)


@pytest.fixture
def power_series():
    times = np.logspace(0, 4, 41)
    return TimeSeries(times, (1.0 + times) ** -0.75, "u_L2")


#######################################################################
# Rate fitting
#######################################################################
@pytest.mark.unit
def test_fit_recovers_exact_power(power_series):
    fit = fit_rate(power_series, window=(100.0, 1e4))
    assert fit.slope == pytest.approx(-0.75, abs=1e-10)
    assert fit.r_squared == pytest.approx(1.0)
    assert fit.points >= 20
    assert fit.quantity == "u_L2"
    assert fit.window == (100.0, 1e4)


@pytest.mark.unit
def test_default_window_is_last_two_decades(power_series):
    fit = fit_rate(power_series)
    assert fit.window == pytest.approx((100.0, 1e4))
    assert fit.slope == pytest.approx(-0.75, abs=1e-10)


@pytest.mark.unit
def test_short_window_is_rejected(power_series):
    with pytest.raises(FitWindowError):
        fit_rate(power_series, window=(1.0, 1.5))


@pytest.mark.unit
def test_zero_values_are_rejected():
    times = np.linspace(1.0, 10.0, 10)
    values = np.ones(10)
    values[4] = 0.0
    with pytest.raises(NonPositiveSeriesError):
        fit_rate(TimeSeries(times, values, "u_L2"), window=(1.0, 10.0))


@pytest.mark.unit
def test_constant_series_has_zero_slope():
    times = np.linspace(1.0, 100.0, 12)
    fit = fit_rate(TimeSeries(times, np.full(12, 3.0), "u_L2"), window=(1.0, 100.0))
    assert fit.slope == pytest.approx(0.0, abs=1e-12)
    assert fit.r_squared == 1.0


@pytest.mark.unit
def test_log_growth_check():
    times = np.logspace(0, 4, 30)
    bounded = log_growth_check(TimeSeries(times, 2.0 * np.log(np.e + times), "u_L2"))
    assert bounded.bounded
    assert bounded.ratio_min == pytest.approx(2.0)
    assert bounded.ratio_max == pytest.approx(2.0)

    growing = log_growth_check(TimeSeries(times, np.sqrt(1.0 + times), "u_L2"))
    assert not growing.bounded


#######################################################################
# Verdicts
#######################################################################
@pytest.mark.unit
def test_compare_two_sided(power_series):
    fit = fit_rate(power_series)
    assert compare(fit, -0.75, 0.05).passed
    assert compare(fit, Fraction(-3, 4), 0.05).predicted == -0.75
    assert not compare(fit, -0.5, 0.05).passed


@pytest.mark.unit
def test_compare_one_sided_accepts_faster_decay(power_series):
    fit = fit_rate(power_series)
    verdict = compare(fit, -0.5, 0.05, one_sided=True)
    assert verdict.passed
    assert verdict.one_sided
    assert not compare(fit, -1.0, 0.05, one_sided=True).passed


@pytest.mark.unit
def test_compare_rejects_nonpositive_tolerance(power_series):
    with pytest.raises(ValueError):
        compare(fit_rate(power_series), -0.75, 0.0)


@pytest.mark.unit
def test_verdict_row(power_series):
    row = compare(fit_rate(power_series), -0.75, 0.05).as_row()
    assert list(row) == ["quantity", "predicted", "measured", "tol", "pass"]
    assert row["quantity"] == "u_L2"
    assert row["pass"] is True


#######################################################################
# X(t) norms
#######################################################################
def _bundle(times, labels=("u_L2", "grad_L2", "ut_L2")):
    return {label: TimeSeries(times, np.ones(len(times)), label) for label in labels}


@pytest.mark.unit
def test_xt_profile_weights_each_quantity():
    """At sigma = 1/2, n = 2: u carries no weight, grad and u_t carry (1+t)."""
    times = [0.0, 1.0, 3.0]
    profile = xt_profile(_bundle(times), Fraction(1, 2), 2)
    np.testing.assert_allclose(profile.values, [3.0, 5.0, 9.0])
    assert xt_norm(_bundle(times), Fraction(1, 2), 2) == pytest.approx(9.0)


@pytest.mark.unit
def test_xt_needs_every_rate_quantity():
    with pytest.raises(MissingQuantityError):
        xt_norm(_bundle([0.0, 1.0], labels=("u_L2", "grad_L2")), Fraction(1, 2), 2)


@pytest.mark.unit
def test_xt_rejects_misaligned_series():
    bundle = _bundle([0.0, 1.0])
    bundle["ut_L2"] = TimeSeries([0.0, 2.0], [1.0, 1.0], "ut_L2")
    with pytest.raises(SeriesAlignmentError):
        xt_norm(bundle, Fraction(1, 2), 2)


@pytest.mark.unit
def test_xt_needs_a_nonempty_rate_table():
    empty = RateTable(Fraction(1, 2), 2, Fraction(2), RegimeTag.HALF, {})
    with pytest.raises(MissingQuantityError):
        xt_norm(_bundle([0.0, 1.0]), Fraction(1, 2), 2, rates=empty)


@pytest.mark.unit
def test_xt_norm_is_the_running_supremum():
    """A profile that peaks early keeps its peak as the norm."""
    times = [0.0, 1.0, 3.0]
    bundle = _bundle(times)
    bundle["u_L2"] = TimeSeries(times, [10.0, 0.0, 0.0], "u_L2")
    assert xt_norm(bundle, Fraction(1, 2), 2) == pytest.approx(10.0 + 2.0)


#######################################################################
# Utilities
#######################################################################
@pytest.mark.unit
def test_time_population():
    times = populate_times_in_between(1.0, 1000.0, 4)
    assert times[0] == 1.0 and times[-1] == 1000.0
    assert times[1] == pytest.approx(10.0)
    assert populate_times_in_between(0.0, 1.0, 3, spacing="linear") == [0.0, 0.5, 1.0]
    with pytest.raises(ValueError):
        populate_times_in_between(0.0, 1.0, 3)
    with pytest.raises(ValueError):
        populate_times_in_between(2.0, 1.0, 3)
    with pytest.raises(ValueError):
        populate_times_in_between(1.0, 2.0, 3, spacing="cubic")


@pytest.mark.unit
def test_last_decades_window():
    assert last_decades_window([1.0, 10.0, 500.0]) == pytest.approx((5.0, 500.0))
    assert last_decades_window([1.0, 1000.0], decades=1) == pytest.approx((100.0, 1000.0))


@pytest.mark.unit
def test_worker_count_resolution(monkeypatch):
    assert resolve_worker_count(3) == 3
    assert resolve_worker_count(0) == 1
    monkeypatch.setenv(WORKERS_ENV_VAR, "5")
    assert resolve_worker_count() == 5
    monkeypatch.setenv(WORKERS_ENV_VAR, "many")
    with pytest.raises(ValueError):
        resolve_worker_count()
    monkeypatch.delenv(WORKERS_ENV_VAR)
    assert resolve_worker_count() >= 1
