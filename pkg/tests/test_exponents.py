"""
Tests for exact exponent thresholds, admissible ranges and predicted rates.
"""

from fractions import Fraction as F

import numpy as np
import pytest

from damped_waves.exponents import (
    Interval,
    RegimeTag,
    admissible_range,
    blowdata_value,
    blowup_threshold,
    classical_reference,
    data_class,
    dm_norm,
    energy_space,
    existence_threshold,
    format_number,
    gap_report,
    gn_theta,
    predicted_rates,
    regime_of,
)
from damped_waves.kernels import ModelSpec
from damped_waves.model.exceptions import DataClassError, HypothesisError
from damped_waves.model.time_series import Quantity
from damped_waves.spectral import RealField
from tests.conftest import gaussian_field


#######################################################################
# Intervals
#######################################################################
@pytest.mark.unit
def test_interval_text_and_membership():
    assert str(Interval.closed(F(2), F(3))) == "[2, 3]"
    assert str(Interval.above(F(5, 2))) == "(5/2, inf)"
    assert str(Interval.closed(F(2), F(2))) == "{2}"
    assert str(Interval.empty_set()) == "empty"
    assert str(Interval.closed(F(3), F(2))) == "empty"

    half_open = Interval.closed(F(2), F(3)) & Interval.above(F(2))
    assert str(half_open) == "(2, 3]"
    assert 2 not in half_open
    assert 3 in half_open
    assert F(5, 2) in half_open
    assert not Interval.above(F(3)).is_bounded_above()


@pytest.mark.unit
def test_touching_open_intersection_is_empty():
    assert (Interval.closed(F(2), F(3)) & Interval.above(F(3))).is_empty()


@pytest.mark.unit
def test_format_number():
    assert format_number(F(5, 2)) == "5/2"
    assert format_number(F(4)) == "4"
    assert format_number(2.0) == "2"
    assert format_number(None) == "inf"


#######################################################################
# Regimes and thresholds
#######################################################################
@pytest.mark.unit
@pytest.mark.parametrize(
    "sigma, regime",
    [
        (F(1, 2), RegimeTag.HALF),
        (1, RegimeTag.VISCO),
        (F(1, 4), RegimeTag.PARABOLIC_LIKE),
        (F(3, 4), RegimeTag.HYPERBOLIC_LIKE),
    ],
)
def test_regime_of(sigma, regime):
    assert regime_of(sigma) is regime


@pytest.mark.unit
@pytest.mark.parametrize("sigma", [0, F(-1, 2), F(3, 2)])
def test_regime_rejects_sigma_outside_unit_interval(sigma):
    with pytest.raises(HypothesisError):
        regime_of(sigma)


@pytest.mark.unit
def test_existence_threshold_dimension_hypothesis():
    assert existence_threshold(F(1, 2), 3) == 2
    with pytest.raises(HypothesisError):
        existence_threshold(F(1, 2), 5)
    assert existence_threshold(F(1, 2), 5, strict=False) == F(3, 2)
    with pytest.raises(HypothesisError):
        existence_threshold(1, 3, m=F(3, 2))


@pytest.mark.unit
def test_exact_input_stays_exact():
    assert isinstance(existence_threshold("1/4", 3), F)
    assert existence_threshold("1/4", 3) == F(9, 5)


#######################################################################
# Admissible ranges
#######################################################################
@pytest.mark.unit
@pytest.mark.parametrize(
    "sigma, n, m, threshold, admissible",
    [
        (F(1, 2), 2, 2, F(3), "(3, inf)"),
        (F(1, 2), 3, 2, F(2), "(2, 3]"),
        (F(1, 2), 4, 2, F(5, 3), "{2}"),
        (F(1, 2), 4, F(9, 5), F(5, 3), "[9/5, 20/11]"),
        (F(1, 2), 4, F(13, 8), F(5, 3), "(5/3, 32/19]"),
        (1, 2, 2, F(4), "(4, inf)"),
        (1, 3, 2, F(5, 2), "(5/2, inf)"),
        (1, 4, 2, F(2), "(2, inf)"),
        (1, 5, 2, F(7, 4), "[2, 5]"),
        (1, 6, 2, F(8, 5), "[2, 3]"),
        (1, 7, 2, F(3, 2), "[2, 7/3]"),
        (1, 8, 2, F(10, 7), "{2}"),
        (1, 9, 2, F(11, 8), "empty"),
        (F(1, 4), 2, 2, F(7, 3), "(7/3, inf)"),
        (F(1, 4), 3, 2, F(9, 5), "[2, 3]"),
        (F(1, 4), 4, 2, F(11, 7), "{2}"),
        (F(3, 4), 2, 2, F(7, 2), "(7/2, inf)"),
        (F(3, 4), 3, 2, F(9, 4), "(9/4, inf)"),
        (F(3, 4), 4, 2, F(11, 6), "[2, 4]"),
        (F(3, 4), 6, 2, F(3, 2), "{2}"),
        (F(3, 4), 7, 2, F(17, 12), "empty"),
        (F(5, 8), 5, 2, F(25, 16), "{2}"),
    ],
)
def test_admissible_range_table(sigma, n, m, threshold, admissible):
    report = admissible_range(sigma, n, m)
    assert report.existence_threshold == threshold
    assert str(report.admissible) == admissible


@pytest.mark.unit
@pytest.mark.parametrize("sigma", [F(1, 2), F(1, 4)])
def test_dimension_hypothesis_gives_empty_range_with_note(sigma):
    report = admissible_range(sigma, 5)
    assert report.admissible.is_empty()
    assert "n in {2,3,4}" in report.note


@pytest.mark.unit
@pytest.mark.parametrize("sigma", [F(5, 8), F(3, 4), F(7, 8), F(99, 100)])
@pytest.mark.parametrize("n", [8, 9, 12, 20])
def test_high_dimensions_are_empty_for_large_sigma(sigma, n):
    assert admissible_range(sigma, n).admissible.is_empty()


@pytest.mark.unit
def test_admissible_points_exceed_threshold():
    """Every admissible p lies strictly above the threshold and inside the integrability interval."""
    for sigma in (F(1, 4), F(1, 2), F(3, 4), 1):
        for n in (2, 3, 4):
            report = admissible_range(sigma, n)
            if report.admissible.is_empty():
                continue
            p = report.admissible.lo + F(1, 1000) if not report.admissible.lo_closed else report.admissible.lo
            assert p > report.existence_threshold
            assert p in report.integrability_interval


#######################################################################
# Blow-up thresholds and gaps
#######################################################################
@pytest.mark.unit
def test_blowup_threshold_branches():
    half = blowup_threshold(F(1, 2), 2)
    assert half.value == 3
    assert half.branches_agree
    assert blowup_threshold(F(1, 4), 2).value == F(7, 3)
    assert blowup_threshold(F(3, 4), 3).value == 2
    visco = blowup_threshold(1, 2)
    assert visco.value == 3
    assert visco.parabolic_branch is None


@pytest.mark.unit
@pytest.mark.parametrize("sigma", [F(1, 4), F(1, 3), F(1, 2)])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_gap_closes_at_or_below_one_half(sigma, n):
    assert gap_report(sigma, n).gap_width == 0


@pytest.mark.unit
@pytest.mark.parametrize("sigma", [F(3, 4), F(7, 8), 1])
@pytest.mark.parametrize("n", [2, 3, 5])
def test_gap_above_one_half(sigma, n):
    assert gap_report(sigma, n).gap_width == (2 * F(sigma) - 1) / (n - 1)


@pytest.mark.unit
def test_gap_example():
    assert gap_report(F(3, 4), 3).gap_width == F(1, 4)


#######################################################################
# Gagliardo-Nirenberg exponent
#######################################################################
@pytest.mark.unit
def test_gn_theta():
    endpoint = gn_theta(3, 1, 2, 6)
    assert endpoint.theta == 1
    assert endpoint.admissible
    assert endpoint.q_upper == 6
    assert not gn_theta(3, 1, 2, 7).admissible
    assert gn_theta(2, 1, 2, 4).q_upper is None
    assert gn_theta(2, 1, 2, 4).theta == F(1, 2)
    with pytest.raises(ValueError):
        gn_theta(3, 1, 2, 1)


#######################################################################
# Predicted rates
#######################################################################
@pytest.mark.unit
def test_visco_rates():
    rates = predicted_rates(1, 3)
    assert rates["u_Lm"].exponent == F(-1, 4)
    assert rates["ut_Lm"].exponent == F(-3, 4)
    assert rates.regime is RegimeTag.VISCO


@pytest.mark.unit
def test_parabolic_like_rates():
    assert predicted_rates(F(1, 4), 2)["u_Lm"].exponent == F(-1, 3)
    assert predicted_rates(F(1, 4), 3)["u_Lm"].exponent == F(-2, 3)
    assert predicted_rates(F(1, 4), 3, semilinear=True)["ut_Lm"].exponent == -1


@pytest.mark.unit
def test_half_rates_depend_on_m():
    assert predicted_rates(F(1, 2), 2)["grad_Lm"].exponent == -1
    assert predicted_rates(F(1, 2), 2)["u_Lm"].exponent == 0
    rates = predicted_rates(F(1, 2), 2, m=F(3, 2))
    assert rates["u_Lm"].exponent == F(1, 3)
    assert rates["grad_Lm"].data_class == "D_3/2^1"
    with pytest.raises(HypothesisError):
        predicted_rates(F(1, 2), 2, m=F(1))


@pytest.mark.unit
def test_logarithmic_case_in_two_dimensions():
    entry = predicted_rates(F(3, 4), 2)["u_Lm"]
    assert entry.log_flag
    assert entry.exponent == 0


@pytest.mark.unit
def test_rates_need_two_dimensions_away_from_one_half():
    with pytest.raises(HypothesisError):
        predicted_rates(F(3, 4), 1)


@pytest.mark.unit
def test_energy_rate_is_slower_component():
    rates = predicted_rates(F(1, 4), 3, semilinear=True)
    grad = rates["grad_Lm"].exponent
    assert rates.exponent_for(Quantity.parse("energy_L2")) == max(grad, F(-1))
    with pytest.raises(KeyError):
        rates.exponent_for(Quantity.parse("u_Linf"))


@pytest.mark.unit
def test_classical_reference():
    assert classical_reference(3).critical_exponent == F(5, 3)
    assert classical_reference(1).u_L2 == F(-1, 4)


@pytest.mark.unit
def test_data_class_tags():
    assert data_class(2, 1) == "D_2^1"
    assert data_class(2, F(1, 2)) == "D_2^{1/2}"


@pytest.mark.unit
@pytest.mark.parametrize(
    "sigma, expected",
    [
        (F(1, 2), {"u_Lm": F(1), "grad_Lm": F(0), "ut_Lm": F(0)}),
        (F(1), {"ut_Lm": F(0), "grad_Lm": F(0), "grad2_L2": F(-1, 2)}),
        (F(1, 4), {"u_Lm": F(1), "ut_Lm": F(0), "grad_Lm": F(-1, 3)}),
        (F(1, 3), {"u_Lm": F(1), "ut_Lm": F(0), "grad_Lm": F(-1, 4)}),
        (F(3, 4), {"u_Lm": F(1), "ut_Lm": F(0), "grad_Lm": F(0), "hdot2sigma": F(0)}),
    ],
)
def test_same_space_rates_in_every_regime(sigma, expected):
    for n in (2, 3, 5):
        rates = predicted_rates(sigma, n, same_space=True)
        assert {key: rates[key].exponent for key in rates} == expected
        assert all(not rates[key].log_flag for key in rates)
        assert predicted_rates(sigma, n, semilinear=True, same_space=True).entries == rates.entries


@pytest.mark.unit
def test_same_space_data_classes():
    hyperbolic = predicted_rates(F(3, 4), 3, same_space=True)
    assert hyperbolic["u_Lm"].data_class == "L^2"
    assert hyperbolic["ut_Lm"].data_class == "H^{1/2} x L^2"
    assert hyperbolic["hdot2sigma"].data_class == "H^{3/2} x L^2"
    assert hyperbolic["hdot2sigma"].quantity == Quantity("hdot", 1.5)
    assert predicted_rates(F(1), 3, same_space=True)["grad2_L2"].data_class == "H^2 x L^2"
    assert predicted_rates(F(1, 2), 2, m=F(3, 2), same_space=True)["grad_Lm"].data_class == "H^{1,3/2} x L^3/2"
    assert "u_Lm" not in predicted_rates(F(1), 3, same_space=True)
    with pytest.raises(HypothesisError):
        predicted_rates(F(1, 4), 1, same_space=True)


@pytest.mark.unit
def test_energy_space_tags():
    assert energy_space(0, 2) == "L^2"
    assert energy_space(1, 2) == "H^1 x L^2"
    assert energy_space(F(1, 2), 2) == "H^{1/2} x L^2"


#######################################################################
# Data functionals
#######################################################################
@pytest.mark.unit
def test_dm_norm_fractional_needs_m_two(small_grid):
    u0 = gaussian_field(small_grid)
    u1 = gaussian_field(small_grid, amplitude=0.5)
    assert dm_norm(u0, u1, 2, 0.5, small_grid) > 0
    with pytest.raises(DataClassError):
        dm_norm(u0, u1, 1.5, 0.5, small_grid)
    with pytest.raises(DataClassError):
        dm_norm(u0, u1, 2.5, 1, small_grid)


@pytest.mark.unit
def test_dm_norm_is_monotone_in_k(small_grid):
    u0 = gaussian_field(small_grid, width=0.5)
    u1 = gaussian_field(small_grid, amplitude=0.5)
    assert dm_norm(u0, u1, 2, 0, small_grid) < dm_norm(u0, u1, 2, 1, small_grid)


@pytest.mark.unit
def test_blowdata_value_is_integral_of_u1(box_grid, half_model):
    """The fractional term has zero mean on the torus."""
    u0 = gaussian_field(box_grid, amplitude=3.0)
    u1 = gaussian_field(box_grid, amplitude=1.0, width=1.0)
    assert blowdata_value(half_model, u0, u1) == pytest.approx(2.0 * np.pi, rel=1e-8)
    zero = RealField(box_grid, np.zeros(box_grid.shape))
    assert blowdata_value(ModelSpec(2, 1, 1.0), u0, zero) == pytest.approx(0.0, abs=1e-9)
