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

from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import numpy as np

from prefdist.common import CapExceeded
from prefdist.orders import LinearExtension, PartialPreferenceOrder

# Downsets are bitmasks over class numbers
_Layer = Dict[int, int]


def _predecessor_masks(poset: PartialPreferenceOrder) -> List[int]:
    masks = []
    for klass in range(poset.m):
        below = np.flatnonzero(poset.closure[:, klass])
        masks.append(sum(1 << int(lower) for lower in below))

    return masks


def _available(preds: List[int], placed: int) -> Iterator[int]:
    """ Classes not yet placed whose predecessors all are, ascending """
    for klass, mask in enumerate(preds):
        if not placed >> klass & 1 and mask & ~placed == 0:
            yield klass


def minimal_extension(poset: PartialPreferenceOrder) -> LinearExtension:
    """
    Topological order that always places the smallest-numbered available
    class next; the sampler's starting state

    @param   poset  Partial order
    @return  Linear extension
    """
    preds = _predecessor_masks(poset)
    placed = 0
    order: List[int] = []

    for _ in range(poset.m):
        klass = next(_available(preds, placed))
        order.append(klass)
        placed |= 1 << klass

    return LinearExtension(poset, order)


def _check_cap(poset: PartialPreferenceOrder, cap: int, what: str) -> None:
    if poset.m > cap:
        raise CapExceeded(f"{what} needs {poset.m} classes, above the cap of {cap}")


def extension_orders(poset: PartialPreferenceOrder, cap: int=10) -> np.ndarray:
    """
    Every linear extension as a row of class numbers, in lexicographic
    order; raises CapExceeded for more than cap classes

    @param   poset  Partial order
    @param   cap    Largest class count to enumerate
    @return  Extensions (numpy.ndarray of shape (count, m))
    """
    _check_cap(poset, cap, "Enumeration")

    preds = _predecessor_masks(poset)
    found: List[Tuple[int, ...]] = []
    prefix: List[int] = []

    def extend(placed: int) -> None:
        if len(prefix) == poset.m:
            found.append(tuple(prefix))
            return

        for klass in _available(preds, placed):
            prefix.append(klass)
            extend(placed | 1 << klass)
            prefix.pop()

    extend(0)
    return np.array(found, dtype=int).reshape(len(found), poset.m)


def enumerate_extensions(poset: PartialPreferenceOrder, cap: int=10) -> List[LinearExtension]:
    """
    Every linear extension, lexicographic in class numbers

    @param   poset  Partial order
    @param   cap    Largest class count to enumerate
    @return  Linear extensions (list)
    """
    return [LinearExtension(poset, row) for row in extension_orders(poset, cap)]


class _DownsetCounts(object):
    """
    Counts over the lattice of downsets: ways[D] orders the classes of D
    as a prefix, completions[D] orders the rest as a suffix. A class x
    entering right after D does so in ways[D] * completions[D + x]
    extensions.
    """
    def __init__(self, poset: PartialPreferenceOrder) -> None:
        self.preds = _predecessor_masks(poset)
        self.sizes = [len(members) for members in poset.classes]
        self.m = poset.m
        self.full = (1 << poset.m) - 1

        self.layers: List[_Layer] = [{0: 1}]
        for _ in range(poset.m):
            following: _Layer = {}
            for downset, ways in self.layers[-1].items():
                for klass in _available(self.preds, downset):
                    grown = downset | 1 << klass
                    following[grown] = following.get(grown, 0) + ways

            self.layers.append(following)

        self.completions: _Layer = {self.full: 1}
        for layer in reversed(self.layers[:-1]):
            for downset in layer:
                self.completions[downset] = sum(self.completions[downset | 1 << klass]
                                                for klass in _available(self.preds, downset))

    @property
    def total(self) -> int:
        return self.completions[0]

    def entries(self) -> Iterator[Tuple[int, int, int]]:
        """ Every (downset, entering class, extension count) """
        for layer in self.layers[:-1]:
            for downset, ways in layer.items():
                for klass in _available(self.preds, downset):
                    yield downset, klass, ways * self.completions[downset | 1 << klass]

    def members(self, downset: int) -> List[int]:
        return [klass for klass in range(self.m) if downset >> klass & 1]


@lru_cache(maxsize=8)
def _downset_counts(poset: PartialPreferenceOrder) -> _DownsetCounts:
    return _DownsetCounts(poset)


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def count_extensions(poset: PartialPreferenceOrder, cap: int=20) -> int:
    """
    Number of linear extensions, by dynamic programming over downsets;
    raises CapExceeded for more than cap classes

    @param   poset  Partial order
    @param   cap    Largest class count to count
    @return  Extension count (int, exact)
    """
    _check_cap(poset, cap, "Counting")
    return _downset_counts(poset).total


def position_distribution(poset: PartialPreferenceOrder, cap: int=20) -> np.ndarray:
    """
    Distribution of the number of outcomes ranked below each class, over
    the uniform distribution on linear extensions

    @param   poset  Partial order
    @param   cap    Largest class count to handle
    @return  Probabilities (numpy.ndarray of shape (m, n)); row x gives
             the chance of each offset for class x
    """
    _check_cap(poset, cap, "Exact positions")
    return _positions(poset)


@lru_cache(maxsize=64)
def _positions(poset: PartialPreferenceOrder) -> np.ndarray:
    counts = _downset_counts(poset)

    weighted = [[0] * poset.space.n for _ in range(poset.m)]
    for downset, klass, extensions in counts.entries():
        below = sum(counts.sizes[member] for member in counts.members(downset))
        weighted[klass][below] += extensions

    return _read_only(np.array([[w / counts.total for w in row] for row in weighted]))


def exact_class_offsets(poset: PartialPreferenceOrder, cap: int=20) -> np.ndarray:
    """ Mean number of outcomes ranked below each class """
    return position_distribution(poset, cap) @ np.arange(poset.space.n, dtype=float)


def precedence_probabilities(poset: PartialPreferenceOrder, cap: int=20) -> np.ndarray:
    """
    Chance that one class precedes another in a uniformly random linear
    extension; x precedes y exactly when x is already placed as y enters

    @param   poset  Partial order
    @param   cap    Largest class count to handle
    @return  Probabilities (numpy.ndarray of shape (m, m)), [x, y] for
             x ranked below y
    """
    _check_cap(poset, cap, "Exact precedence")
    return _precedence(poset)


@lru_cache(maxsize=64)
def _precedence(poset: PartialPreferenceOrder) -> np.ndarray:
    counts = _downset_counts(poset)

    weighted = [[0] * poset.m for _ in range(poset.m)]
    for downset, klass, extensions in counts.entries():
        for member in counts.members(downset):
            weighted[member][klass] += extensions

    return _read_only(np.array([[w / counts.total for w in row] for row in weighted]))
