"""
Copyright (c) 2026 The prefdist developers

This program is free software: you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General
Public License for more details.

You should have received a copy of the GNU General Public License along
with this program. If not, see <http://www.gnu.org/licenses/>.
"""

import os
import re
from typing import Any, Callable, Optional, Type, TypeVar

from prefdist.common.types import ClosenessPolicy, MetricKind

_E = TypeVar("_E")

_RE_REAL = re.compile(r"""
    ^\s*
    (?P<value>
        [+-]?                           # Optional sign
        (?: \d+ (?: \. \d* )? | \. \d+ )
        (?: e [+-]? \d+ )?              # Optional exponent
    )
    \s*$
""", re.VERBOSE | re.IGNORECASE)

_RE_INTEGER = re.compile(r"^\s*(?P<value>[+-]?\d+)\s*$")

# Keywords that defer a value to runtime estimation
_DEFERRED = {"auto", "plugin"}


def path(p: str) -> str:
    """
    Canonicalise paths

    @param   p  Path (string)
    @return  Absolute, normalised path (string)
    """
    return os.path.abspath(
        os.path.normpath(
            os.path.expanduser(p)))


def real(s: str) -> float:
    """
    Canonicalise a real number, rejecting non-finite values

    @param   s  Number (string)
    @return  Parsed number (float)
    """
    match = _RE_REAL.match(s)

    if not match:
        raise ValueError(f"Could not parse real number \"{s}\"")

    return float(match["value"])


def integer(s: str) -> int:
    """
    Canonicalise an integer

    @param   s  Number (string)
    @return  Parsed number (int)
    """
    match = _RE_INTEGER.match(s)

    if not match:
        raise ValueError(f"Could not parse integer \"{s}\"")

    return int(match["value"])


def positive_int(s: str) -> int:
    value = integer(s)

    if value < 1:
        raise ValueError("Value must be a positive integer")

    return value


def non_negative_int(s: str) -> int:
    value = integer(s)

    if value < 0:
        raise ValueError("Value must be a non-negative integer")

    return value


def seed(s: str) -> int:
    """
    Canonicalise a random seed to an unsigned 64-bit integer

    @param   s  Seed (string)
    @return  Seed (int)
    """
    value = integer(s)

    if not 0 <= value < 2**64:
        raise ValueError("Seed must be an unsigned 64-bit integer")

    return value


def positive_real(s: str) -> float:
    value = real(s)

    if value <= 0:
        raise ValueError("Value must be strictly positive")

    return value


def open_unit_interval(s: str) -> float:
    """
    Canonicalise a real number in the open interval (0, 1)

    @param   s  Number (string)
    @return  Parsed number (float)
    """
    value = real(s)

    if not 0 < value < 1:
        raise ValueError("Value must lie strictly between 0 and 1")

    return value


def confidence(s: str) -> float:
    """
    Canonicalise a Chebyshev confidence multiplier, which must exceed 1

    @param   s  Confidence multiplier (string)
    @return  Confidence multiplier (float)
    """
    value = real(s)

    if value <= 1:
        raise ValueError("Confidence multiplier must be greater than 1")

    return value


def deferred(transformer: Callable[[str], Any]) -> Callable[[str], Optional[Any]]:
    """
    Wrap a canonicaliser so that "auto" or "plugin" map to None

    @param   transformer  Underlying canonicaliser
    @return  Canonicaliser accepting the deferral keywords
    """
    def _canon(s: str) -> Optional[Any]:
        if s.strip().lower() in _DEFERRED:
            return None

        return transformer(s)

    return _canon


def _enumeration(enum: Type[_E], name: str) -> Callable[[str], _E]:
    def _canon(s: str) -> _E:
        try:
            return enum(s.strip().lower())

        except ValueError:
            options = ", ".join(member.value for member in enum)
            raise ValueError(f"Invalid {name} \"{s}\"; expected one of {options}")

    return _canon


metric_kind = _enumeration(MetricKind, "metric")
closeness_policy = _enumeration(ClosenessPolicy, "closeness policy")
