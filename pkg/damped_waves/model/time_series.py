#######################################################################
# Project: Damped Waves Module
# File: time_series.py
# Description: Norm histories and the quantity descriptors that label them
# Author: AbigailWilliams1692
# Created: 2026-09-04
# Updated: 2026-10-12
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
import math
import re
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Tuple

# Third-party Packages
import numpy as np

# Local Packages
from damped_waves.model.exceptions import SeriesAlignmentError


#######################################################################
# Quantity Descriptor
#######################################################################
_QUANTITY_KINDS = ("u_Lm", "ut_Lm", "grad_Lm", "energy_Lm", "hdot", "grad2_L2")
_PREFIXES = {"u": "u_Lm", "ut": "ut_Lm", "grad": "grad_Lm", "energy": "energy_Lm"}
_LABEL_PATTERN = re.compile(
    r"^(?P<base>u|ut|grad|energy)_L(?:(?P<two>2)|(?P<inf>inf)|m\((?P<m>[^)]+)\))$"
)
_HDOT_PATTERN = re.compile(r"^hdot\((?P<kappa>[^)]+)\)$")


@dataclass(frozen=True)
class Quantity:
    """
    A norm of the solution evaluated at one time.

    ``kind`` selects the field (u, u_t, gradient, energy vector, homogeneous
    Sobolev seminorm, Hessian) and ``order`` is the Lebesgue exponent m for the
    L^m kinds or the smoothness kappa for ``hdot``.
    """

    kind: str
    order: float = 2.0

    def __post_init__(self) -> None:
        if self.kind not in _QUANTITY_KINDS:
            raise ValueError(f"Unknown quantity kind '{self.kind}'.")
        if self.kind == "hdot" and self.order < 0:
            raise ValueError("hdot smoothness must be nonnegative.")
        if self.kind != "hdot" and self.order < 1:
            raise ValueError("Lebesgue exponent must satisfy m >= 1.")
        if self.kind == "grad2_L2" and self.order != 2:
            raise ValueError("grad2_L2 is an L2 quantity.")

    @classmethod
    def parse(cls, text: str) -> "Quantity":
        """
        Parse labels such as ``u_L2``, ``u_Lm(1.5)``, ``ut_L2``, ``energy_L2``,
        ``u_Linf``, ``hdot(0.75)`` and ``grad2_L2``.

        :param text: str: The quantity label.
        :return: Quantity: The parsed descriptor.
        """
        label = text.strip()
        if label == "grad2_L2":
            return cls(kind="grad2_L2")
        match = _HDOT_PATTERN.match(label)
        if match:
            return cls(kind="hdot", order=float(match.group("kappa")))
        match = _LABEL_PATTERN.match(label)
        if match is None:
            raise ValueError(f"Cannot parse quantity '{text}'.")
        kind = _PREFIXES[match.group("base")]
        if match.group("two"):
            return cls(kind=kind, order=2.0)
        if match.group("inf"):
            return cls(kind=kind, order=math.inf)
        return cls(kind=kind, order=float(match.group("m")))

    @property
    def label(self) -> str:
        """Canonical label, the inverse of ``parse``."""
        if self.kind == "grad2_L2":
            return "grad2_L2"
        if self.kind == "hdot":
            return f"hdot({self.order:g})"
        base = self.kind[: -len("_Lm")]
        if self.order == 2:
            return f"{base}_L2"
        if math.isinf(self.order):
            return f"{base}_Linf"
        return f"{base}_Lm({self.order:g})"

    @property
    def is_l2(self) -> bool:
        """True when Parseval applies, i.e. the radial oracle can evaluate it."""
        return self.kind in ("hdot", "grad2_L2") or self.order == 2

    def spectral_orders(self) -> List[Tuple[int, float]]:
        """
        (time-derivative order j, smoothness kappa) pairs whose squared seminorms
        sum to the square of this quantity when it is an L2 quantity.
        """
        return {
            "u_Lm": [(0, 0.0)],
            "ut_Lm": [(1, 0.0)],
            "grad_Lm": [(0, 1.0)],
            "energy_Lm": [(0, 1.0), (1, 0.0)],
            "hdot": [(0, float(self.order))],
            "grad2_L2": [(0, 2.0)],
        }[self.kind]

    def __str__(self) -> str:
        return self.label


#######################################################################
# Time Series
#######################################################################
@dataclass(frozen=True)
class TimeSeries:
    """
    Norm history: values of one quantity at strictly increasing times.
    """

    times: np.ndarray
    values: np.ndarray
    quantity: str
    mode: str = "grid"
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        times = np.array(self.times, dtype=float)
        values = np.array(self.values, dtype=float)
        if times.ndim != 1 or values.ndim != 1 or times.shape != values.shape:
            raise SeriesAlignmentError(
                f"times and values must be 1-d of equal length, got {times.shape} and {values.shape}."
            )
        if times.size and (np.any(times < 0) or np.any(np.diff(times) <= 0)):
            raise SeriesAlignmentError("times must be nonnegative and strictly increasing.")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ValueError(f"Series '{self.quantity}' must hold finite nonnegative values.")
        times.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.times.size)

    def __iter__(self) -> Iterator[Tuple[float, float]]:
        return iter(zip(self.times.tolist(), self.values.tolist()))

    def restrict(self, t_lo: float, t_hi: float) -> "TimeSeries":
        """
        Keep only the points with t_lo <= t <= t_hi.

        :param t_lo: float: Window start.
        :param t_hi: float: Window end.
        :return: TimeSeries: The restricted series.
        """
        mask = (self.times >= t_lo) & (self.times <= t_hi)
        return TimeSeries(
            times=self.times[mask],
            values=self.values[mask],
            quantity=self.quantity,
            mode=self.mode,
            metadata=dict(self.metadata),
        )

    def is_zero(self) -> bool:
        """True when every value vanishes."""
        return bool(np.all(self.values == 0.0))
