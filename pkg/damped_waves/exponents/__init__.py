from damped_waves.exponents.intervals import Interval, format_number
from damped_waves.exponents.thresholds import (
    BlowupThreshold,
    GapReport,
    GNTheta,
    RangeReport,
    RegimeTag,
    admissible_range,
    blowup_threshold,
    existence_threshold,
    gap_report,
    gn_theta,
    integrability_interval,
    regime_of,
)
from damped_waves.exponents.rates import (
    ClassicalDampingTable,
    RateEntry,
    RateTable,
    classical_reference,
    data_class,
    energy_space,
    predicted_rates,
)
from damped_waves.exponents.data_norms import blowdata_value, dm_norm

__all__ = [
    "Interval",
    "format_number",
    "BlowupThreshold",
    "GapReport",
    "GNTheta",
    "RangeReport",
    "RegimeTag",
    "admissible_range",
    "blowup_threshold",
    "existence_threshold",
    "gap_report",
    "gn_theta",
    "integrability_interval",
    "regime_of",
    "ClassicalDampingTable",
    "RateEntry",
    "RateTable",
    "classical_reference",
    "data_class",
    "energy_space",
    "predicted_rates",
    "blowdata_value",
    "dm_norm",
]
