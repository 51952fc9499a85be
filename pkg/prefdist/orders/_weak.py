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

from itertools import permutations
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from prefdist.common import Relation
from prefdist.orders._exceptions import OrderError
from prefdist.orders._space import Outcome, OutcomeSpace

Tier = FrozenSet[int]


class HeightProfile(object):
    """ Height of every outcome of a space (1 = least preferred) """
    __slots__ = ("_space", "_heights")

    def __init__(self, space: OutcomeSpace, heights: Iterable[float]) -> None:
        values = np.array(list(heights), dtype=float)

        if values.shape != (space.n,):
            raise OrderError("Height profile must give exactly one height per outcome")

        values.setflags(write=False)
        self._space = space
        self._heights = values

    @property
    def space(self) -> OutcomeSpace:
        return self._space

    @property
    def values(self) -> np.ndarray:
        """ Heights indexed by outcome index (read only) """
        return self._heights

    def __getitem__(self, outcome: Outcome) -> float:
        return float(self._heights[self._space.index(outcome)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HeightProfile) \
           and self._space == other._space \
           and np.array_equal(self._heights, other._heights)

    def __repr__(self) -> str:
        return " ".join(f"{label}={height:g}" for label, height in self.as_dict().items())

    def as_dict(self) -> Dict[str, float]:
        return {label: float(h) for label, h in zip(self._space.labels, self._heights)}


def midrank_heights(n: int, tiers: Sequence[Tier]) -> np.ndarray:
    """
    Midrank heights for a sequence of tiers, least preferred first

    Tied outcomes receive the mean of the positions their tier spans,
    which keeps the total at n(n+1)/2.

    @param   n      Outcome count
    @param   tiers  Tiers of outcome indices
    @return  Heights indexed by outcome (numpy.ndarray)
    """
    heights = np.empty(n, dtype=float)
    offset = 0

    for tier in tiers:
        size = len(tier)
        heights[list(tier)] = offset + (size + 1) / 2
        offset += size

    return heights


class WeakOrder(object):
    """
    Complete preference order with ties, stored as an ordered partition
    of the outcome space (least preferred tier first)
    """
    __slots__ = ("_space", "_tiers", "_levels", "_heights")

    def __init__(self, space: OutcomeSpace, tiers: Iterable[Iterable[int]]) -> None:
        """
        Constructor

        @param   space  Outcome space
        @param   tiers  Tiers of outcome indices, least preferred first
        """
        tiers = tuple(frozenset(tier) for tier in tiers)
        levels = np.full(space.n, -1, dtype=int)

        for level, tier in enumerate(tiers):
            if not tier:
                raise OrderError("Tiers must be non-empty")

            for outcome in tier:
                if not 0 <= outcome < space.n:
                    raise OrderError(f"Outcome index {outcome} out of range")

                if levels[outcome] != -1:
                    raise OrderError(f"Outcome \"{space.label(outcome)}\" appears in more than one tier")

                levels[outcome] = level

        missing = [space.label(i) for i in np.flatnonzero(levels == -1)]
        if missing:
            raise OrderError(f"Outcomes missing from order: {', '.join(missing)}")

        levels.setflags(write=False)
        self._space = space
        self._tiers: Tuple[Tier, ...] = tiers
        self._levels = levels
        self._heights: Optional[HeightProfile] = None

    @classmethod
    def from_levels(cls, space: OutcomeSpace, levels: Sequence[float]) -> "WeakOrder":
        """
        Build the order induced by a value per outcome: lower values are
        less preferred and equal values are tied

        @param   space   Outcome space
        @param   levels  Value per outcome index
        @return  Weak order
        """
        values = np.asarray(levels)
        tiers = [np.flatnonzero(values == value).tolist() for value in np.unique(values)]
        return cls(space, tiers)

    @property
    def space(self) -> OutcomeSpace:
        return self._space

    @property
    def tiers(self) -> Tuple[Tier, ...]:
        return self._tiers

    @property
    def levels(self) -> np.ndarray:
        """ Tier index of every outcome (read only) """
        return self._levels

    @property
    def is_strict(self) -> bool:
        return len(self._tiers) == self._space.n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeakOrder) \
           and self._space == other._space \
           and self._tiers == other._tiers

    def __hash__(self) -> int:
        return hash((self._space, self._tiers))

    def __repr__(self) -> str:
        return " < ".join(
            " = ".join(self._space.label(i) for i in sorted(tier))
            for tier in self._tiers
        )

    def relation(self, a: Outcome, b: Outcome) -> Relation:
        """
        Relation between two outcomes; never incomparable

        @param   a  Outcome
        @param   b  Outcome
        @return  Relation of a to b
        """
        level_a = self._levels[self._space.index(a)]
        level_b = self._levels[self._space.index(b)]

        if level_a < level_b:
            return Relation.precedes

        if level_a > level_b:
            return Relation.succeeds

        return Relation.indifferent

    def heights(self) -> HeightProfile:
        """ Midrank height profile (cached) """
        if self._heights is None:
            self._heights = HeightProfile(self._space, midrank_heights(self._space.n, self._tiers))

        return self._heights

    def reverse(self) -> "WeakOrder":
        """ The order with every preference reversed """
        return WeakOrder(self._space, reversed(self._tiers))


def build_weak_order(space: OutcomeSpace, tiers: Iterable[Iterable[Outcome]]) -> WeakOrder:
    """
    Build a weak order from tiers of outcome labels

    @param   space  Outcome space
    @param   tiers  Tiers of labels (or indices), least preferred first
    @return  Weak order
    """
    return WeakOrder(space, [[space.index(outcome) for outcome in tier] for tier in tiers])


def heights(order: WeakOrder) -> HeightProfile:
    return order.heights()


def all_strict_orders(space: OutcomeSpace) -> Iterator[WeakOrder]:
    """ Every strict order on the space, in lexicographic order """
    for permutation in permutations(range(space.n)):
        yield WeakOrder(space, ([i] for i in permutation))
