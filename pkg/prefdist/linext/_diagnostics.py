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

from collections import Counter
from typing import Dict, Hashable, Iterable, Mapping, NamedTuple, Sequence, Union

import numpy as np
from scipy import stats

from prefdist.linext._exact import enumerate_extensions
from prefdist.orders import LinearExtension, OrderError, PartialPreferenceOrder

Distribution = Union[Mapping[Hashable, float], Sequence[float], np.ndarray]


class UniformityTest(NamedTuple):
    """ Pearson chi-square goodness-of-fit against uniform """
    statistic: float
    p_value: float
    categories: int


def total_variation(p: Distribution, q: Distribution) -> float:
    """
    Total variation distance, half the L1 distance

    Mappings are compared over the union of their supports, a missing
    key having mass zero; sequences must index the same support.

    @param   p  Distribution (mapping or sequence of masses)
    @param   q  Distribution (mapping or sequence of masses)
    @return  Distance in [0, 1] (float)
    """
    if isinstance(p, Mapping) and isinstance(q, Mapping):
        support = set(p) | set(q)
        return 0.5 * sum(abs(p.get(x, 0.0) - q.get(x, 0.0)) for x in support)

    if isinstance(p, Mapping) or isinstance(q, Mapping):
        raise ValueError("Cannot compare a keyed distribution with an indexed one")

    p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError("Distributions are over different supports")

    return float(0.5 * np.abs(p - q).sum())


def empirical_distribution(samples: Iterable[Hashable]) -> Dict[Hashable, float]:
    counts = Counter(samples)
    total = sum(counts.values())
    if total == 0:
        raise ValueError("Empirical distribution of no samples")

    return {sample: count / total for sample, count in counts.items()}


def _check_draws(poset: PartialPreferenceOrder, draws: Sequence[LinearExtension]) -> None:
    if not draws:
        raise ValueError("No draws given")

    if any(draw.poset != poset for draw in draws):
        raise OrderError("Draws must be linear extensions of the given partial order")


def uniformity_tv(poset: PartialPreferenceOrder, draws: Sequence[LinearExtension], cap: int=10) -> float:
    """
    Total variation between the draws' empirical distribution and the
    uniform distribution on all linear extensions

    @param   poset  Partial order
    @param   draws  Sampled linear extensions
    @param   cap    Enumeration cap
    @return  Distance (float)
    """
    _check_draws(poset, draws)
    extensions = enumerate_extensions(poset, cap)
    uniform = {extension: 1 / len(extensions) for extension in extensions}
    return total_variation(empirical_distribution(draws), uniform)


def chi_square_uniformity(poset: PartialPreferenceOrder, draws: Sequence[LinearExtension],
                          cap: int=10) -> UniformityTest:
    """
    Chi-square test of the draws against the uniform distribution on all
    linear extensions

    @param   poset  Partial order
    @param   draws  Sampled linear extensions
    @param   cap    Enumeration cap
    @return  Test result (UniformityTest)
    """
    _check_draws(poset, draws)
    extensions = enumerate_extensions(poset, cap)
    counts = Counter(draws)
    observed = [counts.get(extension, 0) for extension in extensions]

    if len(observed) < 2:
        return UniformityTest(0.0, 1.0, len(observed))

    result = stats.chisquare(observed)
    return UniformityTest(float(result.statistic), float(result.pvalue), len(observed))
