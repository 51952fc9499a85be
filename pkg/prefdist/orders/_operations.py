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

from typing import FrozenSet, Iterable, List, Set, TypeVar, Union

import numpy as np

from prefdist.common import Relation
from prefdist.orders._exceptions import OrderError
from prefdist.orders._partial import PartialPreferenceOrder
from prefdist.orders._space import Outcome, OutcomeSpace
from prefdist.orders._weak import WeakOrder

AnyOrder = Union[WeakOrder, PartialPreferenceOrder]
_O = TypeVar("_O", WeakOrder, PartialPreferenceOrder)


def relation_of(order: AnyOrder, a: Outcome, b: Outcome) -> Relation:
    """
    The unique relation between two outcomes under an order

    @param   order  Complete or partial order
    @param   a      Outcome
    @param   b      Outcome
    @return  Relation of a to b
    """
    return order.relation(a, b)


def is_extension(complete: WeakOrder, partial: PartialPreferenceOrder) -> bool:
    """
    Whether a complete order is consistent with a partial order, i.e.,
    every strict preference and every indifference of the partial order
    also holds in the complete order

    @param   complete  Complete order
    @param   partial   Partial order over the same space
    @return  Consistency (bool)
    """
    complete.space.check_same(partial.space)

    levels = complete.levels
    below = partial.outcome_closure()
    same_class = partial.class_of[:, None] == partial.class_of[None, :]

    strict_kept = ~below | (levels[:, None] < levels[None, :])
    ties_kept = ~same_class | (levels[:, None] == levels[None, :])

    return bool(np.all(strict_kept) and np.all(ties_kept))


def _as_classes(order: AnyOrder) -> PartialPreferenceOrder:
    if isinstance(order, WeakOrder):
        return PartialPreferenceOrder.from_weak_order(order)

    return order


def top_k(order: AnyOrder, k: int) -> FrozenSet[str]:
    """
    The top of an order: maximal outcomes are collected in rounds, each
    round admitting every class not strictly below a class still outside
    the set, until at least k outcomes are held. Classes are admitted
    whole, so the result may hold more than k outcomes.

    @param   order  Complete or partial order
    @param   k      Minimum number of outcomes wanted (int >= 1)
    @return  Outcome labels (frozenset)
    """
    if k < 1:
        raise ValueError("k must be a positive integer")

    poset = _as_classes(order)
    closure = poset.closure

    outside = np.ones(poset.m, dtype=bool)
    selected: Set[int] = set()

    while len(selected) < k and outside.any():
        # Maximal among what remains: not below any remaining class
        below_remaining = (closure & outside[None, :]).any(axis=1)
        admitted = np.flatnonzero(outside & ~below_remaining)

        for klass in admitted:
            selected |= poset.classes[klass]

        outside[admitted] = False

    return frozenset(poset.space.label(i) for i in selected)


def restrict(order: _O, subset: Iterable[Outcome]) -> _O:
    """
    The order induced on a subset of outcomes, as a new order over a new
    outcome space (labels kept in their original declaration order)

    @param   order   Complete or partial order
    @param   subset  Outcomes to keep
    @return  Induced order of the same kind
    """
    space = order.space
    kept = sorted({space.index(outcome) for outcome in subset})

    if not kept:
        raise OrderError("Cannot restrict an order to an empty set of outcomes")

    sub_space = OutcomeSpace(space.label(i) for i in kept)
    renumber = {old: new for new, old in enumerate(kept)}

    def _project(members: Iterable[int]) -> List[int]:
        return [renumber[i] for i in members if i in renumber]

    if isinstance(order, WeakOrder):
        tiers = [_project(tier) for tier in order.tiers]
        return WeakOrder(sub_space, (tier for tier in tiers if tier))

    # The closure is already transitive, so restricting it loses nothing
    surviving = [klass for klass, members in enumerate(order.classes) if _project(members)]
    closure = order.closure
    edges = [
        (i, j)
        for i, lower in enumerate(surviving)
        for j, higher in enumerate(surviving)
        if closure[lower, higher]
    ]

    return PartialPreferenceOrder(sub_space, (_project(order.classes[klass]) for klass in surviving), edges)
