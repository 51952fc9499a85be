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

import csv
import logging
from collections import Counter
from datetime import datetime
from typing import FrozenSet, Iterable, List, NamedTuple, Optional, TextIO

import numpy as np

from prefdist.casebase._casebase import CaseBase
from prefdist.casebase._exceptions import InconsistentElicitation
from prefdist.casebase._retrieval import RankedCase, closest_set, nearest
from prefdist.casebase._state import ElicitationState, Query
from prefdist.common import ClosenessPolicy, Listenable, MetricKind, Relation
from prefdist.linext import LinextCaps, SamplerConfig, precedence_probabilities
from prefdist.logs import LogWriter
from prefdist.metrics import EstimationConfig
from prefdist.orders import CycleError, PartialPreferenceOrder, WeakOrder, is_extension


class SessionStep(NamedTuple):
    """ One query of an elicitation session and what followed from it """
    query: Query
    answer: Relation
    ranked: List[RankedCase]
    closest: FrozenSet[str]


class SessionLog(NamedTuple):
    steps: List[SessionStep]
    final_closest: FrozenSet[str]


def simulated_answer(target: WeakOrder, query: Query) -> Relation:
    """ A truthful user's answer: the target's own relation on the pair """
    return target.relation(*query)


def open_queries(state: ElicitationState) -> List[Query]:
    """ Pairs neither asked nor settled by the elicited order, by index """
    elicited = state.elicited
    labels = elicited.space.labels

    return [
        (a, b)
        for i, a in enumerate(labels)
        for b in labels[i + 1:]
        if (a, b) not in state.asked and elicited.relation(a, b) == Relation.incomparable
    ]


def _best_split(candidates: List[Query], orders: List[WeakOrder]) -> Optional[Query]:
    """
    The query whose answers split the orders most evenly: the one that,
    whatever the answer, rules out the most orders; None when no query
    rules out any
    """
    best, best_score = None, 0
    for a, b in candidates:
        answers = Counter(order.relation(a, b) for order in orders)
        score = len(orders) - max(answers.values())
        if score > best_score:
            best, best_score = (a, b), score

    return best


def _most_uncertain(elicited: PartialPreferenceOrder, candidates: List[Query], caps: LinextCaps) -> Query:
    """ The query whose answer the elicited order predicts least well """
    if elicited.m > caps.count_cap:
        return candidates[0]

    below = precedence_probabilities(elicited, caps.count_cap)
    space, klass = elicited.space, elicited.class_of
    odds = [below[klass[space.index(a)], klass[space.index(b)]] for a, b in candidates]
    return candidates[int(np.argmin(np.abs(np.array(odds) - 0.5)))]


def select_query(state: ElicitationState, cb: CaseBase, closest: Optional[Iterable[str]]=None,
                 caps: LinextCaps=LinextCaps()) -> Optional[Query]:
    """
    Next pair to ask about: the open pair that best splits the closest
    set; failing that, the one that best splits the cases still
    consistent with every answer; failing that, the pair whose outcome
    is most uncertain under the elicited order. Ties go to the first
    pair in outcome index order.

    @param   state    Elicitation state
    @param   cb       Case base
    @param   closest  Current closest set (all cases if None)
    @param   caps     Exact computation budgets
    @return  Outcome pair, or None when every pair is settled
    """
    candidates = open_queries(state)
    if not candidates:
        return None

    names = cb.names() if closest is None else [name for name in cb.names() if name in set(closest)]
    consistent = [cb.order(name) for name in cb.names() if is_extension(cb.order(name), state.elicited)]

    for orders in ([cb.order(name) for name in names], consistent):
        query = _best_split(candidates, orders)
        if query is not None:
            return query

    return _most_uncertain(state.elicited, candidates, caps)


class ElicitationSession(Listenable, LogWriter):
    """ Simulated incremental elicitation against a case base """
    def __init__(self, cb: CaseBase, kind: MetricKind=MetricKind.probabilistic,
                 policy: ClosenessPolicy=ClosenessPolicy.conservative,
                 config: EstimationConfig=EstimationConfig(), sampler: SamplerConfig=SamplerConfig(),
                 caps: LinextCaps=LinextCaps(), logger: Optional[logging.Logger]=None) -> None:
        """
        Constructor

        @param   cb       Case base
        @param   kind     Base metric for retrieval
        @param   policy   Closeness policy for the closest set
        @param   config   Estimation settings
        @param   sampler  Extension sampler settings
        @param   caps     Exact computation budgets
        @param   logger   Logger
        """
        super().__init__(logger=logger)
        self._cb = cb
        self._kind = kind
        self._policy = policy
        self._config = config
        self._sampler = sampler
        self._caps = caps
        self.add_listener(self._broadcast_to_log)

    def _broadcast_to_log(self, _timestamp: datetime, step: int, query: Query, answer: Relation,
                          closest: FrozenSet[str]) -> None:
        self.log(logging.INFO, f"Query {step}: {query[0]} {answer.value} {query[1]}; "
                               f"{len(closest)} closest: {', '.join(sorted(closest))}")

    def run(self, target: WeakOrder, budget: int) -> SessionLog:
        """
        Ask up to budget queries of a simulated user holding the target
        order, re-ranking the case base after every answer

        @param   target  The simulated user's complete order
        @param   budget  Maximum number of queries
        @return  Session log
        """
        if budget < 0:
            raise ValueError("Query budget must be non-negative")

        self._cb.space.check_same(target.space)

        state = ElicitationState.initial(self._cb.space)
        closest = frozenset(self._cb.names())
        steps: List[SessionStep] = []

        while state.query_count < budget:
            query = select_query(state, self._cb, closest, self._caps)
            if query is None:
                break

            answer = simulated_answer(target, query)
            state = state.answer(query, answer)

            if not is_extension(target, state.elicited):
                raise InconsistentElicitation("Elicited order no longer agrees with the target")

            ranked = nearest(state, self._cb, self._kind, self._config, self._sampler, self._caps,
                             self.logger)
            closest = closest_set(ranked, self._policy)

            steps.append(SessionStep(query, answer, ranked, closest))
            self.broadcast(state.query_count, query, answer, closest)

        return SessionLog(steps, closest)

    def adapt(self, name: str, state: ElicitationState) -> PartialPreferenceOrder:
        """ A stored case's order completing what has been elicited so far """
        return merge_default(self._cb.order(name), state.elicited, self.logger)


def run_elicitation(target: WeakOrder, cb: CaseBase, budget: int, kind: MetricKind=MetricKind.probabilistic,
                    config: EstimationConfig=EstimationConfig(),
                    policy: ClosenessPolicy=ClosenessPolicy.conservative, sampler: SamplerConfig=SamplerConfig(),
                    caps: LinextCaps=LinextCaps(), logger: Optional[logging.Logger]=None) -> SessionLog:
    return ElicitationSession(cb, kind, policy, config, sampler, caps, logger).run(target, budget)


def merge_default(retrieved: WeakOrder, elicited: PartialPreferenceOrder,
                  logger: Optional[logging.Logger]=None) -> PartialPreferenceOrder:
    """
    Complete an elicited order from a retrieved one: every pair the
    elicited order leaves open takes the retrieved relation, in outcome
    index order, unless it contradicts what is already held

    @param   retrieved  Retrieved complete order
    @param   elicited   Elicited partial order over the same space
    @param   logger     Logger, told of each retrieved relation dropped
    @return  Merged partial order, entailing every elicited relation
    """
    retrieved.space.check_same(elicited.space)
    log = LogWriter(logger)

    merged = elicited
    labels = elicited.space.labels
    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if elicited.relation(a, b) != Relation.incomparable:
                continue

            relation = retrieved.relation(a, b)
            try:
                merged = merged.with_relation(a, relation, b)
            except CycleError:
                log.log(logging.DEBUG, f"Dropping retrieved {a} {relation.value} {b}: contradicts {merged!r}")

    return merged


def write_session_csv(log: SessionLog, cb: CaseBase, stream: TextIO) -> None:
    """
    Write a session log as CSV: the query and answer, each case's value
    and interval, then each case's closest set membership

    @param   log     Session log
    @param   cb      Case base the session ran against
    @param   stream  Output text stream
    """
    names = cb.names()
    writer = csv.writer(stream, lineterminator="\n")

    header = ["step", "query_a", "query_b", "answer"]
    for name in names:
        header.extend([f"{name}_value", f"{name}_low", f"{name}_high"])
    header.extend(f"{name}_closest" for name in names)
    writer.writerow(header)

    for number, step in enumerate(log.steps, start=1):
        estimates = {case.name: case.estimate for case in step.ranked}

        row = [str(number), step.query[0], step.query[1], step.answer.name]
        for name in names:
            estimate = estimates[name]
            row.extend([repr(estimate.value), repr(estimate.interval_low), repr(estimate.interval_high)])
        row.extend("1" if name in step.closest else "0" for name in names)
        writer.writerow(row)
