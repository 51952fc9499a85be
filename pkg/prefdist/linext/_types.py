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

import math
from typing import NamedTuple

import numpy as np

from prefdist.config import PrefdistConfiguration


class SamplerConfig(NamedTuple):
    """ Bubley-Dyer sampler settings """
    epsilon: float = 0.01
    step_constant: float = 4.0
    seed: int = 0
    batch_size: int = 256
    workers: int = 1

    @classmethod
    def from_config(cls, config: PrefdistConfiguration) -> "SamplerConfig":
        sampler = config.sampler
        return cls(epsilon=sampler.epsilon, step_constant=sampler.step_constant, seed=sampler.seed,
                   batch_size=sampler.batch_size, workers=config.estimation.workers)


class LinextCaps(NamedTuple):
    """ Budgets for exact linear extension computations """
    enumeration_cap: int = 10
    count_cap: int = 20
    exact_pair_cap: int = 1_000_000

    @classmethod
    def from_config(cls, config: PrefdistConfiguration) -> "LinextCaps":
        linext = config.linext
        return cls(enumeration_cap=linext.enumeration_cap, count_cap=linext.count_cap,
                   exact_pair_cap=linext.exact_pair_cap)


def mixing_steps(m: int, epsilon: float, step_constant: float=4.0) -> int:
    """
    Chain length sufficient for the lazy adjacent-swap chain on m classes
    to come within epsilon (total variation) of uniform

    @param   m              Class count
    @param   epsilon        Target total variation distance, in (0, 1)
    @param   step_constant  Leading constant of the m^3 log(m / epsilon) bound
    @return  Step count (int); zero when there is nothing to mix
    """
    if not 0 < epsilon < 1:
        raise ValueError("Epsilon must lie strictly between 0 and 1")

    if m < 2:
        return 0

    return math.ceil(step_constant * m ** 3 * math.log(m / epsilon))


class SwapDistribution(object):
    """
    Distribution over adjacent swap positions i = 1, ..., m - 1 with
    weight i(m - i) / K, where K = (m^3 - m) / 6 normalises
    """
    def __init__(self, weights: np.ndarray) -> None:
        """
        Constructor

        @param   weights  Probabilities of positions 1, ..., m - 1
        """
        self._weights = np.asarray(weights, dtype=float)
        self._weights.setflags(write=False)
        self._cdf = np.cumsum(self._weights)

    @classmethod
    def for_classes(cls, m: int) -> "SwapDistribution":
        positions = np.arange(1, m, dtype=float)
        return cls(positions * (m - positions) / ((m ** 3 - m) / 6))

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def positions(self) -> int:
        return len(self._weights)

    def position_for(self, uniforms: np.ndarray) -> np.ndarray:
        """
        Inverse CDF lookup

        @param   uniforms  Values in [0, 1)
        @return  Zero-based lower swap positions, in [0, m - 2]
        """
        found = np.searchsorted(self._cdf, uniforms, side="right")
        return np.clip(found, 0, max(self.positions - 1, 0))
