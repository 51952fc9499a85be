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

from configparser import ParsingError
from typing import Any, Callable, Optional

import prefdist.common.canon as canon
from prefdist.config._tree_builder import Configuration


def parsing(transformer: Callable[[str], Any], description: str) -> Callable[[str], Any]:
    """
    Re-raise canonicalisation failures as configuration parsing errors

    @param   transformer  Canonicaliser raising ValueError
    @param   description  What the value is, for the error message
    @return  Canonicaliser raising ParsingError
    """
    def _canon(value: str) -> Any:
        try:
            return transformer(value)

        except ValueError as e:
            raise ParsingError(f"Invalid {description}: {e}")

    return _canon


seed          = parsing(canon.seed, "seed")
samples       = parsing(canon.deferred(canon.positive_int), "sample count")
confidence    = parsing(canon.confidence, "confidence multiplier")
epsilon       = parsing(canon.open_unit_interval, "epsilon")
tau           = parsing(canon.deferred(canon.positive_real), "tau")
tau_floor     = parsing(canon.positive_real, "tau floor")
workers       = parsing(canon.positive_int, "worker count")
max_samples   = parsing(canon.positive_int, "maximum sample count")


def pilot_samples(value: str) -> int:
    """
    Canonicalise the pilot run size used to estimate tau; at least two
    samples are needed for a variance

    @param   value  Pilot sample count (string)
    @return  Pilot sample count (int)
    """
    count = parsing(canon.positive_int, "pilot sample count")(value)

    if count < 2:
        raise ParsingError("Pilot sample count must be at least 2")

    return count


class EstimationSection(Configuration):
    """ Monte Carlo estimation configuration stub """
