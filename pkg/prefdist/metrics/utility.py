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

import logging
from typing import Iterable, Mapping, Optional

import numpy as np

from prefdist.common import PROBABILITY_TOLERANCE, MetricKind, WorkerPool, derive_seed, shared_pool, stream
from prefdist.logs import LogWriter
from prefdist.metrics._estimation import choose_sample_size, summarise
from prefdist.metrics._kernels import euclidean_rows, footrule_rows
from prefdist.metrics._types import DistanceEstimate, EstimationConfig
from prefdist.orders import Outcome, OutcomeSpace, WeakOrder

# Prospect pairs drawn per random stream
_CHUNK = 16384

# Strategic equivalence is decided on representatives to this tolerance
_EQUIVALENCE_TOLERANCE = 1e-9


class _SpaceVector(object):
    """ Real vector indexed by the outcomes of a space """
    def __init__(self, space: OutcomeSpace, values: Iterable[float]) -> None:
        values = np.array(list(values), dtype=float)

        if values.shape != (space.n,):
            raise ValueError(f"Expected {space.n} values, got {values.size}")

        if not np.all(np.isfinite(values)):
            raise ValueError("Values must be finite")

        values.setflags(write=False)
        self._space = space
        self._values = values

    @classmethod
    def from_mapping(cls, space: OutcomeSpace, values: Mapping[Outcome, float]):
        indexed = {space.index(outcome): value for outcome, value in values.items()}
        missing = [space.label(i) for i in range(space.n) if i not in indexed]
        if missing:
            raise ValueError(f"No value given for {', '.join(missing)}")

        return cls(space, (indexed[i] for i in range(space.n)))

    @property
    def space(self) -> OutcomeSpace:
        return self._space

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __getitem__(self, outcome: Outcome) -> float:
        return float(self._values[self._space.index(outcome)])

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) \
           and self._space == other._space \
           and np.array_equal(self._values, other._values)

    def __repr__(self) -> str:
        pairs = ", ".join(f"{label}={value:g}" for label, value in zip(self._space.labels, self._values))
        return f"{type(self).__name__}({pairs})"


class UtilityVector(_SpaceVector):
    """ Utility of every outcome, meaningful up to positive affine maps """

    @property
    def is_constant(self) -> bool:
        return bool(np.ptp(self.values) == 0)


class Prospect(_SpaceVector):
    """ Probability distribution over outcomes """
    def __init__(self, space: OutcomeSpace, probabilities: Iterable[float]) -> None:
        super().__init__(space, probabilities)

        if np.any(self.values < 0):
            raise ValueError("Probabilities must be non-negative")

        if abs(self.values.sum() - 1) > PROBABILITY_TOLERANCE:
            raise ValueError("Probabilities must sum to 1")


def expected_utility(prospect: Prospect, utility: UtilityVector) -> float:
    prospect.space.check_same(utility.space)
    return float(prospect.values @ utility.values)


def _representative(values: np.ndarray) -> np.ndarray:
    spread = np.ptp(values)
    if spread == 0:
        return np.zeros_like(values)

    return (values - values.min()) / spread


def canonical_representative(utility: UtilityVector) -> UtilityVector:
    """
    Representative of the utility's strategic equivalence class, scaled
    so its least preferred outcome is 0 and its most preferred is 1; a
    constant utility maps to all zeros

    @param   utility  Utility vector
    @return  Representative (UtilityVector)
    """
    return UtilityVector(utility.space, _representative(utility.values))


def strategically_equivalent(u1: UtilityVector, u2: UtilityVector) -> bool:
    """ Whether u2 = alpha * u1 + beta for some alpha > 0 """
    u1.space.check_same(u2.space)
    return bool(np.allclose(_representative(u1.values), _representative(u2.values),
                            rtol=0, atol=_EQUIVALENCE_TOLERANCE))


def utility_footrule(u1: UtilityVector, u2: UtilityVector) -> float:
    u1.space.check_same(u2.space)
    return float(footrule_rows(_representative(u1.values), _representative(u2.values)))


def utility_euclidean(u1: UtilityVector, u2: UtilityVector) -> float:
    u1.space.check_same(u2.space)
    return float(euclidean_rows(_representative(u1.values), _representative(u2.values)))


def _simplex_points(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    # Normalised unit exponentials are uniform on the simplex
    draws = rng.exponential(size=(count, n))
    return draws / draws.sum(axis=1, keepdims=True)


def sample_prospect(space: OutcomeSpace, rng: np.random.Generator) -> Prospect:
    """
    Uniformly random prospect

    @param   space  Outcome space
    @param   rng    Random generator
    @return  Prospect
    """
    return Prospect(space, _simplex_points(rng, 1, space.n)[0])


def induced_weak_order(utility: UtilityVector) -> WeakOrder:
    """ Complete order ranking outcomes by utility, equal utilities tied """
    return WeakOrder.from_levels(utility.space, utility.values)


def _conflicts(r1: np.ndarray, r2: np.ndarray, root: int, chunk: int, count: int) -> np.ndarray:
    """
    Conflict indicators for the prospect pairs of one stream

    A zero expected utility difference against a strict one counts as a
    conflict; two zeros do not.
    """
    rng = stream(root, chunk)
    difference = _simplex_points(rng, count, len(r1)) - _simplex_points(rng, count, len(r1))
    return (np.sign(difference @ r1) != np.sign(difference @ r2)).astype(float)


class UtilityDistanceEstimator(LogWriter, WorkerPool):
    """
    Monte Carlo probabilistic distance between utility vectors, the
    chance that a uniformly random pair of prospects is ranked
    differently by the two utilities

    Pair j always comes from stream j // chunk size, so estimates do not
    depend on the number of workers.
    """
    def __init__(self, config: EstimationConfig, logger: Optional[logging.Logger]=None) -> None:
        super().__init__(logger=logger)
        self._config = config

        self.pool = shared_pool(config.workers)

    @property
    def workers(self) -> int:
        return self._config.workers

    def _draw(self, r1: np.ndarray, r2: np.ndarray, root: int, count: int) -> np.ndarray:
        chunks = [(chunk, min(_CHUNK, count - start)) for chunk, start in enumerate(range(0, count, _CHUNK))]
        values = self.pool.map(lambda job: _conflicts(r1, r2, root, *job), chunks)
        return np.concatenate(list(values))

    def estimate(self, u1: UtilityVector, u2: UtilityVector) -> DistanceEstimate:
        """
        Estimate the distance

        @param   u1  Utility vector
        @param   u2  Utility vector over the same space
        @return  Estimate (DistanceEstimate)
        """
        u1.space.check_same(u2.space)
        if u1.space.n < 2:
            raise ValueError("Probabilistic distance needs at least two outcomes")

        config = self._config
        degenerate = u1.is_constant or u2.is_constant

        if strategically_equivalent(u1, u2):
            # No pair of prospects can be ranked differently
            return DistanceEstimate.exact(0.0, seed=config.seed, degenerate=degenerate)

        r1, r2 = _representative(u1.values), _representative(u2.values)
        pilot_root = derive_seed(config.seed, 1)
        count = choose_sample_size(config, lambda k: self._draw(r1, r2, pilot_root, k), self.logger)

        self.log(logging.DEBUG, f"Estimating utility distance from {count} prospect pairs")
        return summarise(self._draw(r1, r2, config.seed, count), config, degenerate)


def probabilistic_distance_utilities(u1: UtilityVector, u2: UtilityVector, config: EstimationConfig,
                                     logger: Optional[logging.Logger]=None) -> DistanceEstimate:
    return UtilityDistanceEstimator(config, logger).estimate(u1, u2)


def utility_distance(kind: MetricKind, u1: UtilityVector, u2: UtilityVector,
                     config: EstimationConfig=EstimationConfig(),
                     logger: Optional[logging.Logger]=None) -> DistanceEstimate:
    """
    Distance between utility vectors under any metric; footrule and
    euclidean are exact, probabilistic is estimated

    @param   kind    Metric
    @param   u1      Utility vector
    @param   u2      Utility vector over the same space
    @param   config  Estimation settings
    @param   logger  Logger
    @return  Estimate (DistanceEstimate)
    """
    if kind == MetricKind.probabilistic:
        return probabilistic_distance_utilities(u1, u2, config, logger)

    measure = utility_footrule if kind == MetricKind.footrule else utility_euclidean
    degenerate = u1.is_constant or u2.is_constant
    return DistanceEstimate.exact(measure(u1, u2), seed=config.seed, degenerate=degenerate)
