#######################################################################
# Project: Damped Waves Module
# File: rates.py
# Description: Predicted polynomial decay rates per damping regime
# Author: AbigailWilliams1692
# Created: 2026-09-21
# Updated: 2026-10-15
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Union

# Local Packages
from damped_waves.exponents.intervals import Number, _num, format_number
from damped_waves.exponents.thresholds import RegimeTag, regime_of
from damped_waves.model.exceptions import HypothesisError
from damped_waves.model.time_series import Quantity

Real = Union[int, float, str, Fraction]


#######################################################################
# Rate Table Types
#######################################################################
def data_class(m: Number, k: Number) -> str:
    """Tag of the mixed data space (L^1 cap H^{k,m}) x (L^1 cap L^m), e.g. ``D_2^1``."""
    k_text = format_number(k)
    if "/" in k_text or "." in k_text:
        k_text = "{" + k_text + "}"
    return f"D_{format_number(m)}^{k_text}"


@dataclass(frozen=True)
class RateEntry:
    """
    Predicted bound (1+t)^exponent for one quantity; with ``log_flag`` the bound
    is log(e+t) instead (exponent 0).
    """

    exponent: Number
    log_flag: bool
    data_class: str
    quantity: Quantity

    def weight(self, t: float) -> float:
        """(1+t)^exponent, the decay weight used by X(t) norms."""
        return (1.0 + t) ** float(self.exponent)


@dataclass(frozen=True)
class RateTable:
    """Predicted decay exponents keyed by quantity name."""

    sigma: Number
    n: int
    m: Number
    regime: RegimeTag
    entries: Dict[str, RateEntry] = field(default_factory=dict)

    def __getitem__(self, key: str) -> RateEntry:
        return self.entries[key]

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def keys(self) -> List[str]:
        return list(self.entries)

    def exponent_for(self, quantity: Quantity) -> Number:
        """
        Predicted exponent for a measurable quantity. The energy vector decays
        like its slower component.

        :param quantity: Quantity: The measured norm.
        :return: The predicted exponent.
        """
        if quantity.kind == "energy_Lm":
            return max(self.entries["grad_Lm"].exponent, self.entries["ut_Lm"].exponent)
        for entry in self.entries.values():
            if entry.quantity == quantity:
                return entry.exponent
        raise KeyError(f"No predicted rate for '{quantity.label}'.")


#######################################################################
# Predicted Rates
#######################################################################
def energy_space(k: Number, m: Number) -> str:
    """Tag of the data space H^{k,m} x L^m (L^m alone when k = 0), e.g. ``H^1 x L^2``."""
    m_text = format_number(m)
    if k == 0:
        return f"L^{m_text}"
    k_text = format_number(k)
    if m == 2:
        k_text = "{" + k_text + "}" if "/" in k_text else k_text
        return f"H^{k_text} x L^2"
    return f"H^{{{k_text},{m_text}}} x L^{m_text}"


def _same_space_entries(
    regime: RegimeTag, s: Number, m: Number, u: Quantity, ut: Quantity, grad: Quantity
) -> Dict[str, RateEntry]:
    """
    Rates for data without the L^1 part. In the visco-elastic regime no L^2 bound
    on u itself is available, so u has no entry.
    """
    entries: Dict[str, RateEntry] = {}
    zero = _num(0)
    if regime is not RegimeTag.VISCO:
        entries["u_Lm"] = RateEntry(_num(1), False, energy_space(0, m), u)

    if regime is RegimeTag.HALF:
        entries["grad_Lm"] = RateEntry(zero, False, energy_space(1, m), grad)
        entries["ut_Lm"] = RateEntry(zero, False, energy_space(1, m), ut)
    elif regime is RegimeTag.VISCO:
        entries["ut_Lm"] = RateEntry(zero, False, energy_space(0, 2), ut)
        entries["grad_Lm"] = RateEntry(zero, False, energy_space(1, 2), grad)
        entries["grad2_L2"] = RateEntry(_num(-1) / 2, False, energy_space(2, 2), Quantity("grad2_L2"))
    elif regime is RegimeTag.PARABOLIC_LIKE:
        entries["ut_Lm"] = RateEntry(zero, False, energy_space(1, 2), ut)
        entries["grad_Lm"] = RateEntry(-(1 - 2 * s) / (2 * (1 - s)), False, energy_space(1, 2), grad)
    else:
        entries["ut_Lm"] = RateEntry(zero, False, energy_space(2 * (1 - s), 2), ut)
        entries["grad_Lm"] = RateEntry(zero, False, energy_space(1, 2), grad)
        entries["hdot2sigma"] = RateEntry(zero, False, energy_space(2 * s, 2), Quantity("hdot", float(2 * s)))
    return entries


def predicted_rates(
    sigma: Real,
    n: int,
    m: Real = 2,
    semilinear: bool = False,
    same_space: bool = False,
) -> RateTable:
    """
    Decay exponents of the linear (or small-data semilinear) solution.

    :param sigma: Damping order in (0,1].
    :param n: Space dimension.
    :param m: Lebesgue exponent in (1,2] at sigma = 1/2; 2 elsewhere.
    :param semilinear: Use the semilinear table (differs for sigma < 1/2 only,
        where u_t carries (1+t)^{-1}).
    :param same_space: Rates for data without the L^1 part (energy-space data).
        The semilinear flag does not change them.
    :return: RateTable: exponent, log flag and data class per quantity.
    """
    regime = regime_of(sigma)
    s, m_ = _num(sigma), _num(m)
    if int(n) != n or n < 1:
        raise HypothesisError(f"n must be a positive integer, got {n}")
    n = int(n)
    n_ = _num(n)
    if regime is not RegimeTag.HALF:
        if n < 2:
            raise HypothesisError(f"decay estimates for sigma={sigma} require n >= 2, got n={n}")
        if m_ != 2:
            raise HypothesisError(f"m enters only at sigma=1/2; other regimes use m=2, got {m}")
    elif not 1 < m_ <= 2:
        raise HypothesisError(f"m must lie in (1,2] at sigma=1/2, got {m}")

    m_float = float(m_)
    u = Quantity("u_Lm", m_float)
    ut = Quantity("ut_Lm", m_float)
    grad = Quantity("grad_Lm", m_float)
    entries: Dict[str, RateEntry] = {}

    if same_space:
        entries = _same_space_entries(regime, s, m_, u, ut, grad)

    elif regime is RegimeTag.HALF:
        loss = n_ * (1 - 1 / m_)
        entries["u_Lm"] = RateEntry(1 - loss, False, data_class(m_, 0), u)
        entries["grad_Lm"] = RateEntry(-loss, False, data_class(m_, 1), grad)
        entries["ut_Lm"] = RateEntry(-loss, False, data_class(m_, 1), ut)

    elif regime is RegimeTag.VISCO:
        entries["u_Lm"] = RateEntry(-(n_ - 2) / 4, n == 2, data_class(2, 0), u)
        entries["ut_Lm"] = RateEntry(-n_ / 4, False, data_class(2, 0), ut)
        entries["grad_Lm"] = RateEntry(-n_ / 4, False, data_class(2, 1), grad)
        entries["grad2_L2"] = RateEntry(-(n_ + 2) / 4, False, data_class(2, 2), Quantity("grad2_L2"))

    elif regime is RegimeTag.PARABOLIC_LIKE:
        u_rate = -(n_ / 4 - s) / (1 - s)
        entries["u_Lm"] = RateEntry(u_rate, False, data_class(2, 0), u)
        entries["ut_Lm"] = RateEntry(_num(-1) if semilinear else u_rate - 1, False, data_class(2, 1), ut)
        entries["grad_Lm"] = RateEntry(-((n_ + 2) / 4 - s) / (1 - s), False, data_class(2, 1), grad)

    else:
        entries["u_Lm"] = RateEntry(-(n_ - 2) / (4 * s), n == 2, data_class(2, 0), u)
        entries["ut_Lm"] = RateEntry(-n_ / (4 * s), False, data_class(2, 2 * (1 - s)), ut)
        entries["grad_Lm"] = RateEntry(-n_ / (4 * s), False, data_class(2, 1), grad)
        entries["hdot2sigma"] = RateEntry(
            -(n_ - 2) / (4 * s) - 1, False, data_class(2, 2 * s), Quantity("hdot", float(2 * s))
        )

    return RateTable(s, n, m_, regime, entries)


#######################################################################
# Classical Frictional Damping Reference
#######################################################################
@dataclass(frozen=True)
class ClassicalDampingTable:
    """
    Reference values for u_tt - Laplace(u) + mu u_t = f(u) (sigma = 0), kept for
    comparison in reports only; sigma = 0 lies outside the model domain.
    """

    n: int
    critical_exponent: Fraction
    u_L2: Fraction
    ut_L2: Fraction
    grad_L2: Fraction


def classical_reference(n: int) -> ClassicalDampingTable:
    """
    Classical damped-wave critical exponent 1 + 2/n and L2 decay rates.

    :param n: Space dimension, at least 1.
    :return: ClassicalDampingTable: The reference row.
    """
    if int(n) != n or n < 1:
        raise HypothesisError(f"n must be a positive integer, got {n}")
    n_ = Fraction(int(n))
    return ClassicalDampingTable(
        n=int(n),
        critical_exponent=1 + 2 / n_,
        u_L2=-n_ / 4,
        ut_L2=-n_ / 4 - 1,
        grad_L2=-n_ / 4 - Fraction(1, 2),
    )
