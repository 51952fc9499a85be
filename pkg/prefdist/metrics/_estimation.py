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
from fractions import Fraction
from typing import Callable, Optional, Tuple

import numpy as np

from prefdist.common import EstimationMethod
from prefdist.metrics._types import DistanceEstimate, EstimationConfig


def chebyshev_sample_size(confidence: float, tau: float, epsilon: float) -> int:
    """
    Sample size after which the relative error exceeds epsilon with
    probability at most 1 / confidence

    Evaluated in exact rational arithmetic on the decimal forms of the
    arguments, so that e.g. (100, 1, 0.1) gives 40000 rather than 40001.

    @param   confidence  Chebyshev constant c > 1
    @param   tau         Relative variance bound, Var / mean^2 > 0
    @param   epsilon     Relative accuracy in (0, 1]
    @return  ceil(4 c tau / epsilon^2) (int)
    """
    if not confidence > 1:
        raise ValueError("Confidence constant must exceed 1")

    if not tau > 0:
        raise ValueError("Tau must be positive")

    if not 0 < epsilon <= 1:
        raise ValueError("Epsilon must lie in (0, 1]")

    c, t, e = (Fraction(repr(float(x))) for x in (confidence, tau, epsilon))
    return math.ceil(4 * c * t / e ** 2)


def relative_variance(mean: float, variance: float, floor: float) -> float:
    """ Plug-in tau, Var / mean^2, floored """
    if mean <= 0:
        return floor

    return max(variance / mean ** 2, floor)


def chebyshev_interval(mean: float, variance: float, count: int, confidence: float,
                       tau: Optional[float]=None, floor: float=0.01) -> Tuple[float, float]:
    """
    Interval mean * (1 -+ sqrt(c tau / k)), with the lower end clamped to 0

    @param   mean        Sample mean
    @param   variance    Sample variance
    @param   count       Sample size k
    @param   confidence  Chebyshev constant c
    @param   tau         Fixed tau (None for the plug-in estimate)
    @param   floor       Plug-in tau floor
    @return  Interval endpoints (tuple of float)
    """
    if tau is None:
        tau = relative_variance(mean, variance, floor)

    half = mean * math.sqrt(confidence * tau / count)
    return max(mean - half, 0.0), mean + half


def choose_sample_size(config: EstimationConfig, pilot: Callable[[int], np.ndarray],
                       logger: Optional[logging.Logger]=None) -> int:
    """
    Sample size from the configuration: explicit, or Chebyshev-sized from
    a fixed tau or from a pilot run's plug-in tau

    @param   config  Estimation settings
    @param   pilot   Function drawing that many pilot values
    @param   logger  Logger
    @return  Sample size (int)
    """
    if config.sample_count is not None:
        return config.sample_count

    tau = config.tau
    if tau is None:
        values = pilot(config.pilot_samples)
        tau = relative_variance(float(values.mean()), float(values.var(ddof=1)), config.tau_floor)
        if logger:
            logger.debug(f"Pilot of {len(values)} samples gives tau {tau:.4g}")

    wanted = chebyshev_sample_size(config.confidence, tau, config.epsilon)
    if wanted > config.max_samples:
        if logger:
            logger.warning(f"Chebyshev sample size {wanted} exceeds the maximum; using {config.max_samples}")

        return config.max_samples

    return wanted


def summarise(values: np.ndarray, config: EstimationConfig, degenerate: bool=False) -> DistanceEstimate:
    """
    Monte Carlo estimate from per-sample values

    @param   values      Per-sample distances, in sample index order
    @param   config      Estimation settings
    @param   degenerate  Flag for degenerate inputs
    @return  Estimate (DistanceEstimate)
    """
    count = len(values)
    if count == 0:
        raise ValueError("Cannot estimate from an empty sample")

    mean = float(np.mean(values))
    variance = float(np.var(values, ddof=1)) if count > 1 else 0.0
    low, high = chebyshev_interval(mean, variance, count, config.confidence, config.tau, config.tau_floor)

    return DistanceEstimate(mean, count, variance, min(low, mean), max(high, mean),
                            EstimationMethod.monte_carlo, config.seed, degenerate)
