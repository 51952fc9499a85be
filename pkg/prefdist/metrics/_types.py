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

from typing import List, NamedTuple, Optional, Tuple

from prefdist.common import EstimationMethod, MetricKind
from prefdist.config import PrefdistConfiguration
from prefdist.orders import LinearExtension

CSV_HEADER = ("metric", "method", "value", "k", "variance", "interval_low", "interval_high", "seed")


class EstimationConfig(NamedTuple):
    """
    Monte Carlo estimation settings

    A sample count of None sizes the sample by Chebyshev's inequality;
    a tau of None estimates it from a pilot run.
    """
    seed: int = 0
    sample_count: Optional[int] = None
    confidence: float = 20.0
    epsilon: float = 0.01
    tau: Optional[float] = None
    pilot_samples: int = 1000
    tau_floor: float = 0.01
    max_samples: int = 100_000
    workers: int = 1

    @classmethod
    def from_config(cls, config: PrefdistConfiguration) -> "EstimationConfig":
        estimation = config.estimation
        return cls(seed=estimation.seed, sample_count=estimation.samples, confidence=estimation.confidence,
                   epsilon=estimation.epsilon, tau=estimation.tau, pilot_samples=estimation.pilot_samples,
                   tau_floor=estimation.tau_floor, max_samples=estimation.max_samples,
                   workers=estimation.workers)


class DistanceEstimate(NamedTuple):
    """ Exact or estimated distance with its sampling summary """
    value: float
    sample_count: int
    sample_variance: float
    interval_low: float
    interval_high: float
    method: EstimationMethod
    seed: int
    degenerate: bool = False

    @classmethod
    def exact(cls, value: float, sample_count: int=0, seed: int=0, degenerate: bool=False) -> "DistanceEstimate":
        value = float(value)
        return cls(value, sample_count, 0.0, value, value, EstimationMethod.exact, seed, degenerate)

    @property
    def standard_error(self) -> float:
        if self.sample_count < 1:
            return 0.0

        return (self.sample_variance / self.sample_count) ** 0.5

    def csv_row(self, kind: MetricKind) -> List[str]:
        return [kind.value, self.method.value, repr(self.value), str(self.sample_count),
                repr(self.sample_variance), repr(self.interval_low), repr(self.interval_high), str(self.seed)]


ExtensionPair = Tuple[LinearExtension, LinearExtension]


class DistanceInterval(NamedTuple):
    """ Range of a base metric over pairs of linear extensions """
    low: float
    high: float
    low_witness: Optional[ExtensionPair] = None
    high_witness: Optional[ExtensionPair] = None
    exact: bool = True
