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
from typing import FrozenSet, List, NamedTuple, Optional, Sequence, Union

from prefdist.casebase._casebase import CaseBase
from prefdist.casebase._state import ElicitationState
from prefdist.common import EXACT_TOLERANCE, Closeness, ClosenessPolicy, MetricKind, derive_seed
from prefdist.linext import LinextCaps, SamplerConfig
from prefdist.metrics import DistanceEstimate, DistanceInterval, EstimationConfig, PartialDistanceEstimator, \
                             compare_closeness
from prefdist.orders import PartialPreferenceOrder, as_partial


class RankedCase(NamedTuple):
    """ A stored case and its distance from the elicited order """
    name: str
    estimate: DistanceEstimate

    @property
    def interval(self) -> DistanceInterval:
        return DistanceInterval(self.estimate.interval_low, self.estimate.interval_high, exact=False)


def nearest(state: Union[ElicitationState, PartialPreferenceOrder], cb: CaseBase, kind: MetricKind,
            config: EstimationConfig=EstimationConfig(), sampler: SamplerConfig=SamplerConfig(),
            caps: LinextCaps=LinextCaps(), logger: Optional[logging.Logger]=None) -> List[RankedCase]:
    """
    Rank the stored cases by average distance from an elicited order;
    each case is compared as a partial order with a single extension,
    with its own seed derived from its position in the base

    @param   state     Elicitation state, or its elicited partial order
    @param   cb        Case base over the same space
    @param   kind      Base metric
    @param   config    Estimation settings
    @param   sampler   Extension sampler settings
    @param   caps      Exact computation budgets
    @param   logger    Logger
    @return  Cases, nearest first (list of RankedCase)
    """
    if not len(cb):
        raise ValueError("Cannot search an empty case base")

    elicited = state.elicited if isinstance(state, ElicitationState) else state
    cb.space.check_same(elicited.space)

    ranked: List[RankedCase] = []
    for index, name in enumerate(cb.names()):
        estimator = PartialDistanceEstimator(config._replace(seed=derive_seed(config.seed, index)),
                                             sampler, caps, logger)
        ranked.append(RankedCase(name, estimator.avg_distance(elicited, as_partial(cb.order(name)), kind)))

    # Stable: equal distances keep case base order
    return sorted(ranked, key=lambda case: case.estimate.value)


def closest_set(ranked: Sequence[RankedCase],
                policy: ClosenessPolicy=ClosenessPolicy.conservative) -> FrozenSet[str]:
    """
    Cases not decidedly farther than the best case under a closeness
    policy; under the conservative policy, those whose interval overlaps
    the best case's interval

    @param   ranked  Ranked cases
    @param   policy  Closeness policy
    @return  Case names (frozenset)
    """
    if not ranked:
        return frozenset()

    if policy == ClosenessPolicy.minimin:
        best = min(ranked, key=lambda case: case.estimate.interval_low)
    elif policy == ClosenessPolicy.minimax:
        best = min(ranked, key=lambda case: case.estimate.interval_high)
    else:
        best = ranked[0]

    # Exact distances that agree to rounding are ties
    padded = DistanceInterval(best.estimate.interval_low + EXACT_TOLERANCE,
                              best.estimate.interval_high + EXACT_TOLERANCE, exact=False)

    return frozenset(case.name for case in ranked
                     if compare_closeness(padded, case.interval, policy) != Closeness.closer_b)
