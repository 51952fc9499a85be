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
import math
from datetime import datetime
from enum import Enum
from typing import NamedTuple, Optional, Tuple

import numpy as np

from prefdist.common import AsyncTaskStatus, CapExceeded, Closeness, ClosenessPolicy, EstimationMethod, \
                            EvaluationMode, Listenable, MetricKind, derive_seed
from prefdist.linext import ExtensionSampler, LinextCaps, SamplerConfig, count_extensions, exact_heights, \
                            extension_heights, extension_orders, position_distribution, precedence_probabilities, \
                            sampled_heights
from prefdist.logs import LogWriter
from prefdist.metrics._estimation import choose_sample_size, summarise
from prefdist.metrics._kernels import distance_rows, euclidean_rows, footrule_rows
from prefdist.metrics._types import DistanceEstimate, DistanceInterval, EstimationConfig
from prefdist.orders import LinearExtension, PartialPreferenceOrder, restrict, top_k

# Extensions drawn per order for sampled heights when no sample count is set
DEFAULT_HEIGHT_DRAWS = 10_000

# Rows of the first order's extensions compared per exact block
_BLOCK = 256


class _Exact(Enum):
    """ Exact evaluation strategies """
    counting = "counting"
    enumeration = "enumeration"


# Averages that decompose over outcomes or outcome pairs
_SEPARABLE = frozenset({MetricKind.footrule, MetricKind.probabilistic})


class _ExactPairs(NamedTuple):
    """ Base metric over every pair of extensions """
    mean: float
    low: float
    high: float
    low_pair: Tuple[np.ndarray, np.ndarray]
    high_pair: Tuple[np.ndarray, np.ndarray]


class _SampledPairs(NamedTuple):
    """ Base metric over the j-th draws from each order """
    values: np.ndarray
    orders1: np.ndarray
    orders2: np.ndarray


def _poset_key(poset: PartialPreferenceOrder):
    return tuple(tuple(sorted(members)) for members in poset.classes), tuple(sorted(poset.strict_edges))


def _roles(p1: PartialPreferenceOrder, p2: PartialPreferenceOrder) -> Tuple[int, int]:
    """
    Stream indices for the two orders, fixed by their content rather than
    their position, so swapping the arguments reuses the same draws
    """
    return (1, 0) if _poset_key(p2) < _poset_key(p1) else (0, 1)


class PartialDistanceEstimator(Listenable, LogWriter):
    """
    Distances between partial orders through their linear extensions:
    exact over all extension pairs when within the configured budgets,
    otherwise estimated from sampled pairs
    """
    def __init__(self, config: EstimationConfig=EstimationConfig(), sampler: SamplerConfig=SamplerConfig(),
                 caps: LinextCaps=LinextCaps(), logger: Optional[logging.Logger]=None) -> None:
        """
        Constructor

        @param   config   Estimation settings
        @param   sampler  Extension sampler settings (its seed is replaced
                          by seeds derived from the estimation seed)
        @param   caps     Exact computation budgets
        @param   logger   Logger
        """
        super().__init__(logger=logger)
        self._config = config
        self._sampler = sampler._replace(workers=config.workers)
        self._caps = caps
        self.add_listener(self._broadcast_to_log)

    def _broadcast_to_log(self, _timestamp: datetime, status: AsyncTaskStatus, what: str) -> None:
        self.log(logging.DEBUG, f"Estimation of {what} {status.name}")

    @property
    def config(self) -> EstimationConfig:
        return self._config

    def exact_feasible(self, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder) -> bool:
        """ Whether every extension pair fits the exact budgets """
        caps = self._caps
        if max(p1.m, p2.m) > caps.enumeration_cap:
            return False

        cap = max(caps.count_cap, caps.enumeration_cap)
        return count_extensions(p1, cap) * count_extensions(p2, cap) <= caps.exact_pair_cap

    def _use_exact(self, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, mode: EvaluationMode,
                   kind: Optional[MetricKind]=None) -> Optional[_Exact]:
        """
        How to evaluate exactly, if at all: footrule and probabilistic
        averages decompose over outcomes or outcome pairs and so follow
        from downset counts; anything else enumerates extension pairs
        """
        p1.space.check_same(p2.space)

        if mode == EvaluationMode.sampled:
            return None

        if kind in _SEPARABLE and max(p1.m, p2.m) <= self._caps.count_cap:
            return _Exact.counting

        if self.exact_feasible(p1, p2):
            return _Exact.enumeration

        if mode == EvaluationMode.exact:
            raise CapExceeded("Exact evaluation exceeds the enumeration or extension pair budget")

        return None

    def _counted_mean(self, kind: MetricKind, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder) -> float:
        """
        Mean base metric over independent uniform extensions, from exact
        class precedence and position probabilities
        """
        cap = self._caps.count_cap
        n = p1.space.n

        if kind == MetricKind.probabilistic:
            if n < 2:
                return 0.0

            def _relations(poset: PartialPreferenceOrder) -> Tuple[np.ndarray, np.ndarray]:
                klass = poset.class_of
                below = precedence_probabilities(poset, cap)[np.ix_(klass, klass)]
                return below, (klass[:, None] == klass[None, :]).astype(float)

            below1, tied1 = _relations(p1)
            below2, tied2 = _relations(p2)
            agree = below1 * below2 + below1.T * below2.T + tied1 * tied2

            lower, upper = np.triu_indices(n, 1)
            return float(np.mean(1 - agree[lower, upper]))

        def _heights(poset: PartialPreferenceOrder) -> Tuple[np.ndarray, np.ndarray]:
            klass = poset.class_of
            sizes = np.array([len(poset.classes[k]) for k in klass], dtype=float)
            offsets = np.arange(n, dtype=float)
            return position_distribution(poset, cap)[klass], offsets[None, :] + (sizes[:, None] + 1) / 2

        chance1, heights1 = _heights(p1)
        chance2, heights2 = _heights(p2)
        gaps = np.abs(heights1[:, :, None] - heights2[:, None, :])
        return float(0.5 * np.einsum("jo,jp,jop->", chance1, chance2, gaps))

    def _exact_pairs(self, kind: MetricKind, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder) -> _ExactPairs:
        cap = self._caps.enumeration_cap
        orders1, orders2 = extension_orders(p1, cap), extension_orders(p2, cap)
        heights1, heights2 = extension_heights(p1, orders1), extension_heights(p2, orders2)
        width = len(heights2)

        total = 0.0
        low, high = math.inf, -math.inf
        low_at = high_at = (0, 0)

        for start in range(0, len(heights1), _BLOCK):
            rows = heights1[start:start + _BLOCK]
            block = distance_rows(kind, np.repeat(rows, width, axis=0), np.tile(heights2, (len(rows), 1)))
            block = block.reshape(len(rows), width)
            total += block.sum()

            # First occurrence in row-major order wins
            i, j = np.unravel_index(np.argmin(block), block.shape)
            if block[i, j] < low:
                low, low_at = block[i, j], (start + i, j)

            i, j = np.unravel_index(np.argmax(block), block.shape)
            if block[i, j] > high:
                high, high_at = block[i, j], (start + i, j)

        count = len(heights1) * width
        return _ExactPairs(total / count, float(low), float(high),
                           (orders1[low_at[0]], orders2[low_at[1]]), (orders1[high_at[0]], orders2[high_at[1]]))

    def _sampled_pairs(self, kind: MetricKind, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder,
                       root: int, count: int) -> _SampledPairs:
        role1, role2 = _roles(p1, p2)
        draws1 = ExtensionSampler(self._sampler._replace(seed=derive_seed(root, role1)), self.logger)
        draws2 = ExtensionSampler(self._sampler._replace(seed=derive_seed(root, role2)), self.logger)

        orders1, orders2 = draws1.sample_orders(p1, count), draws2.sample_orders(p2, count)
        values = distance_rows(kind, extension_heights(p1, orders1), extension_heights(p2, orders2))
        return _SampledPairs(values, orders1, orders2)

    def _sample_size(self, kind: MetricKind, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder) -> int:
        pilot_root = derive_seed(self._config.seed, 1)
        return choose_sample_size(self._config,
                                  lambda k: self._sampled_pairs(kind, p1, p2, pilot_root, k).values,
                                  self.logger)

    def avg_distance(self, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, kind: MetricKind,
                     mode: EvaluationMode=EvaluationMode.auto) -> DistanceEstimate:
        """
        Mean base metric between a linear extension of each order

        @param   p1    Partial order
        @param   p2    Partial order over the same space
        @param   kind  Base metric
        @param   mode  Exact, sampled or auto
        @return  Estimate (DistanceEstimate)
        """
        what = f"average {kind.value} distance"
        self.broadcast(AsyncTaskStatus.started, what)

        strategy = self._use_exact(p1, p2, mode, kind)
        if strategy == _Exact.counting:
            estimate = DistanceEstimate.exact(self._counted_mean(kind, p1, p2), seed=self._config.seed)

        elif strategy == _Exact.enumeration:
            estimate = DistanceEstimate.exact(self._exact_pairs(kind, p1, p2).mean, seed=self._config.seed)

        else:
            count = self._sample_size(kind, p1, p2)
            estimate = summarise(self._sampled_pairs(kind, p1, p2, self._config.seed, count).values, self._config)

        self.broadcast(AsyncTaskStatus.finished, what)
        return estimate

    def extreme_interval(self, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, kind: MetricKind,
                         mode: EvaluationMode=EvaluationMode.auto) -> DistanceInterval:
        """
        Smallest and largest base metric between a linear extension of
        each order; sampled intervals lie inside the true one

        @param   p1    Partial order
        @param   p2    Partial order over the same space
        @param   kind  Base metric
        @param   mode  Exact, sampled or auto
        @return  Interval with witnessing extension pairs (DistanceInterval)
        """
        if self._use_exact(p1, p2, mode):
            pairs = self._exact_pairs(kind, p1, p2)
            low_pair, high_pair = pairs.low_pair, pairs.high_pair
            low, high, exact = pairs.low, pairs.high, True

        else:
            count = self._sample_size(kind, p1, p2)
            sampled = self._sampled_pairs(kind, p1, p2, self._config.seed, count)
            i, j = int(np.argmin(sampled.values)), int(np.argmax(sampled.values))
            low_pair = sampled.orders1[i], sampled.orders2[i]
            high_pair = sampled.orders1[j], sampled.orders2[j]
            low, high, exact = float(sampled.values[i]), float(sampled.values[j]), False

        def _witness(pair: Tuple[np.ndarray, np.ndarray]) -> Tuple[LinearExtension, LinearExtension]:
            return LinearExtension(p1, pair[0]), LinearExtension(p2, pair[1])

        return DistanceInterval(low, high, _witness(low_pair), _witness(high_pair), exact)

    def _heights(self, poset: PartialPreferenceOrder, exact: bool, role: int):
        if exact:
            return exact_heights(poset, self._caps.count_cap), np.zeros(poset.space.n)

        draws = self._config.sample_count or DEFAULT_HEIGHT_DRAWS
        sampler = ExtensionSampler(self._sampler._replace(seed=derive_seed(self._config.seed, role)), self.logger)
        return sampled_heights(poset, draws, sampler)

    def generalized(self, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, kind: MetricKind,
                    mode: EvaluationMode=EvaluationMode.auto) -> DistanceEstimate:
        """
        Footrule or euclidean distance between average height profiles

        Sampled estimates bound their error through the triangle
        inequality: each mean height is within its Chebyshev half-width,
        and the distance moves by at most the aggregated half-widths. The
        reported variance is the summed variance of the per-outcome
        height differences.

        @param   p1    Partial order
        @param   p2    Partial order over the same space
        @param   kind  Footrule or euclidean
        @param   mode  Exact, sampled or auto
        @return  Estimate (DistanceEstimate)
        """
        if kind == MetricKind.probabilistic:
            raise ValueError("Height-based distances are footrule or euclidean only")

        p1.space.check_same(p2.space)
        cap = self._caps.count_cap
        fits = max(p1.m, p2.m) <= cap

        if mode == EvaluationMode.exact and not fits:
            raise CapExceeded(f"Exact heights need at most {cap} classes")

        exact = mode != EvaluationMode.sampled and fits
        role1, role2 = _roles(p1, p2)
        (mean1, var1), (mean2, var2) = self._heights(p1, exact, role1), self._heights(p2, exact, role2)

        aggregate = footrule_rows if kind == MetricKind.footrule else euclidean_rows
        value = float(aggregate(mean1, mean2))

        if exact:
            return DistanceEstimate.exact(value, seed=self._config.seed)

        draws = self._config.sample_count or DEFAULT_HEIGHT_DRAWS
        widths1 = np.sqrt(self._config.confidence * var1 / draws)
        widths2 = np.sqrt(self._config.confidence * var2 / draws)
        if kind == MetricKind.footrule:
            half = 0.5 * (widths1.sum() + widths2.sum())
        else:
            half = np.linalg.norm(widths1) + np.linalg.norm(widths2)

        return DistanceEstimate(value, draws, float((var1 + var2).sum()), max(value - half, 0.0),
                                value + half, EstimationMethod.monte_carlo, self._config.seed)

    def topk_distance(self, p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, kind: MetricKind, k: int,
                      mode: EvaluationMode=EvaluationMode.auto) -> DistanceEstimate:
        """
        Average distance between the orders restricted to the union of
        their top k outcomes

        @param   p1    Partial order
        @param   p2    Partial order over the same space
        @param   kind  Base metric
        @param   k     Outcomes wanted from the top of each order
        @param   mode  Exact, sampled or auto
        @return  Estimate (DistanceEstimate)
        """
        p1.space.check_same(p2.space)
        kept = top_k(p1, k) | top_k(p2, k)
        return self.avg_distance(restrict(p1, kept), restrict(p2, kept), kind, mode)


def avg_distance(p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, kind: MetricKind,
                 config: EstimationConfig=EstimationConfig(), mode: EvaluationMode=EvaluationMode.auto,
                 sampler: SamplerConfig=SamplerConfig(), caps: LinextCaps=LinextCaps(),
                 logger: Optional[logging.Logger]=None) -> DistanceEstimate:
    return PartialDistanceEstimator(config, sampler, caps, logger).avg_distance(p1, p2, kind, mode)


def extreme_interval(p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, kind: MetricKind,
                     config: EstimationConfig=EstimationConfig(), mode: EvaluationMode=EvaluationMode.auto,
                     sampler: SamplerConfig=SamplerConfig(), caps: LinextCaps=LinextCaps(),
                     logger: Optional[logging.Logger]=None) -> DistanceInterval:
    return PartialDistanceEstimator(config, sampler, caps, logger).extreme_interval(p1, p2, kind, mode)


def generalized_footrule(p1: PartialPreferenceOrder, p2: PartialPreferenceOrder,
                         config: EstimationConfig=EstimationConfig(), mode: EvaluationMode=EvaluationMode.auto,
                         sampler: SamplerConfig=SamplerConfig(), caps: LinextCaps=LinextCaps(),
                         logger: Optional[logging.Logger]=None) -> DistanceEstimate:
    """ Half the L1 distance between average height profiles """
    estimator = PartialDistanceEstimator(config, sampler, caps, logger)
    return estimator.generalized(p1, p2, MetricKind.footrule, mode)


def generalized_euclidean(p1: PartialPreferenceOrder, p2: PartialPreferenceOrder,
                          config: EstimationConfig=EstimationConfig(), mode: EvaluationMode=EvaluationMode.auto,
                          sampler: SamplerConfig=SamplerConfig(), caps: LinextCaps=LinextCaps(),
                          logger: Optional[logging.Logger]=None) -> DistanceEstimate:
    """ L2 distance between average height profiles """
    estimator = PartialDistanceEstimator(config, sampler, caps, logger)
    return estimator.generalized(p1, p2, MetricKind.euclidean, mode)


def topk_distance(p1: PartialPreferenceOrder, p2: PartialPreferenceOrder, kind: MetricKind, k: int,
                  config: EstimationConfig=EstimationConfig(), mode: EvaluationMode=EvaluationMode.auto,
                  sampler: SamplerConfig=SamplerConfig(), caps: LinextCaps=LinextCaps(),
                  logger: Optional[logging.Logger]=None) -> DistanceEstimate:
    return PartialDistanceEstimator(config, sampler, caps, logger).topk_distance(p1, p2, kind, k, mode)


def compare_closeness(d_ab: DistanceInterval, d_ac: DistanceInterval,
                      policy: ClosenessPolicy=ClosenessPolicy.conservative) -> Closeness:
    """
    Decide which of b and c is closer to a from interval distances

    Conservative needs the intervals to separate; minimin compares the
    lower ends and minimax the upper ends. Ties are undecided.

    @param   d_ab    Distance between a and b
    @param   d_ac    Distance between a and c
    @param   policy  Closeness policy
    @return  Verdict (Closeness)
    """
    if policy == ClosenessPolicy.conservative:
        if d_ab.high < d_ac.low:
            return Closeness.closer_b

        if d_ac.high < d_ab.low:
            return Closeness.closer_c

        return Closeness.undecided

    b, c = (d_ab.low, d_ac.low) if policy == ClosenessPolicy.minimin else (d_ab.high, d_ac.high)
    if b < c:
        return Closeness.closer_b

    if c < b:
        return Closeness.closer_c

    return Closeness.undecided
