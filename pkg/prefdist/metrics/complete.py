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
from typing import Iterable, List, Optional, Tuple

import numpy as np

from prefdist.common import EXACT_TOLERANCE, MetricKind
from prefdist.metrics._kernels import discordance_rows, distance_rows, euclidean_rows, footrule_rows
from prefdist.orders import Outcome, WeakOrder

OrderTriple = Tuple[WeakOrder, WeakOrder, WeakOrder]


def _heights(o1: WeakOrder, o2: WeakOrder) -> Tuple[np.ndarray, np.ndarray]:
    o1.space.check_same(o2.space)
    return o1.heights().values, o2.heights().values


def conflict(o1: WeakOrder, o2: WeakOrder, a: Outcome, b: Outcome) -> int:
    """
    Conflict indicator of two orders on an outcome pair: 1 when one order
    strictly prefers one way and the other weakly prefers the other way

    @param   o1  Complete order
    @param   o2  Complete order over the same space
    @param   a   Outcome
    @param   b   Another outcome
    @return  0 or 1
    """
    o1.space.check_same(o2.space)
    i, j = o1.space.index(a), o1.space.index(b)
    if i == j:
        raise ValueError("Conflict is only defined on distinct outcomes")

    l1, l2 = o1.levels, o2.levels
    return int(np.sign(l1[j] - l1[i]) != np.sign(l2[j] - l2[i]))


def footrule(o1: WeakOrder, o2: WeakOrder) -> float:
    """ Spearman's footrule: half the L1 distance between height profiles """
    return float(footrule_rows(*_heights(o1, o2)))


def euclidean(o1: WeakOrder, o2: WeakOrder) -> float:
    return float(euclidean_rows(*_heights(o1, o2)))


def probabilistic(o1: WeakOrder, o2: WeakOrder) -> float:
    """
    Proportion of outcome pairs on which the orders conflict; zero when
    there are fewer than two outcomes

    @param   o1  Complete order
    @param   o2  Complete order over the same space
    @return  Distance in [0, 1] (float)
    """
    o1.space.check_same(o2.space)
    return float(discordance_rows(o1.levels, o2.levels)[0])


_METRICS = {
    MetricKind.footrule:      footrule,
    MetricKind.euclidean:     euclidean,
    MetricKind.probabilistic: probabilistic
}


def distance(kind: MetricKind, o1: WeakOrder, o2: WeakOrder) -> float:
    return _METRICS[kind](o1, o2)


def upper_bound(kind: MetricKind, n: int) -> float:
    """
    Largest distance between strict orders on n outcomes, attained by
    an order and its reverse

    @param   kind  Metric
    @param   n     Outcome count
    @return  Bound (float)
    """
    if kind == MetricKind.footrule:
        return float(n * n // 4)

    if kind == MetricKind.euclidean:
        return math.sqrt(n * (n * n - 1) / 3)

    return 1.0


def normalized(kind: MetricKind, o1: WeakOrder, o2: WeakOrder) -> float:
    """
    Distance divided by its upper bound for the outcome count

    @param   kind  Metric
    @param   o1    Complete order (strict, for footrule and euclidean)
    @param   o2    Complete order over the same space
    @return  Normalised distance in [0, 1] (float)
    """
    value = distance(kind, o1, o2)

    n = o1.space.n
    if n < 2:
        raise ValueError("Normalisation needs at least two outcomes")

    if kind != MetricKind.probabilistic and not (o1.is_strict and o2.is_strict):
        raise ValueError(f"Normalised {kind.value} distance is defined on strict orders only")

    return value / upper_bound(kind, n)


def similarity(o1: WeakOrder, o2: WeakOrder) -> float:
    """ Fuzzy similarity: the complement of the probabilistic distance """
    return 1.0 - probabilistic(o1, o2)


def lukasiewicz(x: float, y: float) -> float:
    """ Lukasiewicz t-norm """
    return max(0.0, x + y - 1.0)


def distance_matrix(kind: MetricKind, orders: List[WeakOrder]) -> np.ndarray:
    """
    Distances between every pair of orders

    @param   kind    Metric
    @param   orders  Complete orders over one space
    @return  Matrix (numpy.ndarray of shape (len(orders), len(orders)))
    """
    for order in orders[1:]:
        orders[0].space.check_same(order.space)

    count = len(orders)
    heights = np.array([order.heights().values for order in orders])
    rows = distance_rows(kind, np.repeat(heights, count, axis=0), np.tile(heights, (count, 1)))
    return rows.reshape(count, count)


def relative_equivalence_witness(kind1: MetricKind, kind2: MetricKind,
                                 orders: Iterable[WeakOrder]) -> Optional[OrderTriple]:
    """
    Search exhaustively for orders (a, b, c) where one metric puts b
    strictly closer to a than c is, and the other does not

    Triples are visited lexicographically in the given order, after
    duplicates are dropped; the first violation is returned.

    @param   kind1   Metric
    @param   kind2   Metric
    @param   orders  At least three distinct complete orders over one space
    @return  Witness triple, or None when the metrics agree throughout
    """
    distinct = list(dict.fromkeys(orders))
    if len(distinct) < 3:
        raise ValueError("Relative equivalence needs at least three distinct orders")

    d1 = distance_matrix(kind1, distinct)
    d2 = distance_matrix(kind2, distinct)

    for a in range(len(distinct)):
        closer1 = d1[a][None, :] - d1[a][:, None] > EXACT_TOLERANCE
        closer2 = d2[a][None, :] - d2[a][:, None] > EXACT_TOLERANCE

        violations = np.argwhere(closer1 != closer2)
        if len(violations):
            b, c = violations[0]
            return distinct[a], distinct[b], distinct[c]

    return None
