#######################################################################
# Project: Damped Waves Module
# File: intervals.py
# Description: Exact real intervals for exponent ranges
# Author: AbigailWilliams1692
# Created: 2026-09-20
# Updated: 2026-10-15
#######################################################################

#######################################################################
# Import Packages
#######################################################################
# Standard Packages
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral
from typing import Optional, Union

# Third-party Packages
import numpy as np

Number = Union[Fraction, float]


#######################################################################
# Number Helpers
#######################################################################
def _num(value: Union[int, float, str, Fraction]) -> Number:
    """
    Exact Fraction for int, str and Fraction input; float input stays float.

    :param value: The number to convert.
    :return: Fraction or float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Integral, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return float(value)


def format_number(value: Optional[Number]) -> str:
    """
    Short text form: ``5/2`` for fractions, ``2`` for integers, ``%g`` for floats
    and ``inf`` for None.
    """
    if value is None:
        return "inf"
    if isinstance(value, Fraction):
        return str(value)
    if float(value).is_integer():
        return str(int(value))
    return f"{value:g}"


#######################################################################
# Interval Class
#######################################################################
@dataclass(frozen=True)
class Interval:
    """
    A subset of the real line with exact endpoints.

    ``lo = None`` means unbounded below and ``hi = None`` means unbounded above;
    unbounded ends are never represented by a large float.
    """

    lo: Optional[Number] = None
    hi: Optional[Number] = None
    lo_closed: bool = False
    hi_closed: bool = False
    empty: bool = False

    #################################################
    # Constructors
    #################################################
    @classmethod
    def empty_set(cls) -> "Interval":
        return cls(empty=True)

    @classmethod
    def closed(cls, lo: Number, hi: Optional[Number]) -> "Interval":
        """[lo, hi], or [lo, inf) when hi is None."""
        return cls(lo=lo, hi=hi, lo_closed=True, hi_closed=hi is not None).normalized()

    @classmethod
    def above(cls, lo: Number, closed: bool = False) -> "Interval":
        """(lo, inf), or [lo, inf) when closed."""
        return cls(lo=lo, hi=None, lo_closed=closed, hi_closed=False)

    def normalized(self) -> "Interval":
        """Collapse inverted or half-open degenerate intervals into the empty set."""
        if self.empty:
            return self
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                return Interval.empty_set()
            if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
                return Interval.empty_set()
        return self

    #################################################
    # Queries
    #################################################
    def is_empty(self) -> bool:
        return self.empty

    def is_point(self) -> bool:
        return not self.empty and self.lo is not None and self.lo == self.hi

    def is_bounded_above(self) -> bool:
        return self.empty or self.hi is not None

    def contains(self, x: Union[int, float, Fraction]) -> bool:
        """
        Membership test.

        :param x: The point.
        :return: bool: True if x lies in the interval.
        """
        if self.empty:
            return False
        if self.lo is not None:
            if x < self.lo or (x == self.lo and not self.lo_closed):
                return False
        if self.hi is not None:
            if x > self.hi or (x == self.hi and not self.hi_closed):
                return False
        return True

    def __contains__(self, x: Union[int, float, Fraction]) -> bool:
        return self.contains(x)

    #################################################
    # Set Operations
    #################################################
    def intersect(self, other: "Interval") -> "Interval":
        """
        Intersection of two intervals.

        :param other: Interval: The other interval.
        :return: Interval: The (possibly empty) intersection.
        """
        if self.empty or other.empty:
            return Interval.empty_set()

        # Lower end: the larger bound wins; a tie is closed only if both are
        if self.lo is None:
            lo, lo_closed = other.lo, other.lo_closed
        elif other.lo is None or self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed

        # Upper end
        if self.hi is None:
            hi, hi_closed = other.hi, other.hi_closed
        elif other.hi is None or self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed

        return Interval(lo, hi, lo_closed, hi_closed).normalized()

    def __and__(self, other: "Interval") -> "Interval":
        return self.intersect(other)

    #################################################
    # Utility Methods
    #################################################
    def __str__(self) -> str:
        if self.empty:
            return "empty"
        if self.is_point():
            return "{" + format_number(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        lo = "-inf" if self.lo is None else format_number(self.lo)
        return f"{left}{lo}, {format_number(self.hi)}{right}"
