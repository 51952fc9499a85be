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
from typing import Optional

import numpy as np

from prefdist.common import CapExceeded, EvaluationMode, SummaryStat
from prefdist.linext._chain import ExtensionSampler
from prefdist.linext._exact import exact_class_offsets
from prefdist.linext._types import LinextCaps, SamplerConfig
from prefdist.orders import HeightProfile, PartialPreferenceOrder


def extension_heights(poset: PartialPreferenceOrder, orders: np.ndarray) -> np.ndarray:
    """
    Outcome heights of linear extensions given as rows of class numbers

    @param   poset   Partial order
    @param   orders  Extensions (numpy.ndarray of shape (k, m))
    @return  Heights (numpy.ndarray of shape (k, n))
    """
    orders = np.atleast_2d(orders)
    sizes = np.array([len(members) for members in poset.classes], dtype=float)

    ordered_sizes = sizes[orders]
    offsets = np.cumsum(ordered_sizes, axis=1) - ordered_sizes

    class_heights = np.empty(orders.shape, dtype=float)
    np.put_along_axis(class_heights, orders, offsets + (ordered_sizes + 1) / 2, axis=1)
    return class_heights[:, poset.class_of]


def exact_heights(poset: PartialPreferenceOrder, cap: int=20) -> np.ndarray:
    sizes = np.array([len(members) for members in poset.classes], dtype=float)
    class_heights = exact_class_offsets(poset, cap) + (sizes + 1) / 2
    return class_heights[poset.class_of]


def sampled_heights(poset: PartialPreferenceOrder, draws: int, sampler: ExtensionSampler) -> SummaryStat:
    """
    Per-outcome sample mean and variance of heights over sampled extensions

    @param   poset    Partial order
    @param   draws    Number of draws
    @param   sampler  Extension sampler
    @return  Mean and variance arrays (SummaryStat)
    """
    heights = extension_heights(poset, sampler.sample_orders(poset, draws))
    variance = heights.var(axis=0, ddof=1) if draws > 1 else np.zeros(poset.space.n)
    return SummaryStat(heights.mean(axis=0), variance)


def average_heights(poset: PartialPreferenceOrder, config: SamplerConfig=SamplerConfig(),
                    mode: EvaluationMode=EvaluationMode.auto, caps: LinextCaps=LinextCaps(),
                    draws: int=10000, logger: Optional[logging.Logger]=None) -> HeightProfile:
    """
    Mean height of every outcome over the uniform distribution on linear
    extensions; exact by downset counting when within the counting cap,
    otherwise from sampled extensions

    @param   poset   Partial order
    @param   config  Sampler settings
    @param   mode    Exact, sampled or auto
    @param   caps    Exact computation budgets
    @param   draws   Draws in sampled mode
    @param   logger  Logger
    @return  Height profile
    """
    if mode == EvaluationMode.exact or (mode == EvaluationMode.auto and poset.m <= caps.count_cap):
        if poset.m > caps.count_cap:
            raise CapExceeded(f"Exact heights need {poset.m} classes, above the cap of {caps.count_cap}")

        return HeightProfile(poset.space, exact_heights(poset, caps.count_cap))

    mean, _ = sampled_heights(poset, draws, ExtensionSampler(config, logger))
    return HeightProfile(poset.space, mean)
