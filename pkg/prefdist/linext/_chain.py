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
from typing import List, Optional, Sequence

import numpy as np

from prefdist.common import WorkerPool, shared_pool, stream
from prefdist.linext._exact import minimal_extension
from prefdist.linext._types import SamplerConfig, SwapDistribution, mixing_steps
from prefdist.logs import LogWriter
from prefdist.orders import LinearExtension, PartialPreferenceOrder

# Steps drawn at a time for each chain
_STEP_CHUNK = 1024


def chain_step(state: LinearExtension, rng: np.random.Generator,
               distribution: Optional[SwapDistribution]=None) -> LinearExtension:
    """
    One step of the lazy adjacent-swap chain

    A single uniform u decides both moves: u < 1/2 holds, otherwise
    2u - 1 picks the swap position, which is applied only if the two
    classes there are incomparable.

    @param   state         Current linear extension
    @param   rng           Random generator
    @param   distribution  Swap position distribution (derived if None)
    @return  Next linear extension
    """
    poset = state.poset
    if distribution is None:
        distribution = SwapDistribution.for_classes(poset.m)

    u = rng.random()
    if u < 0.5 or poset.m < 2:
        return state

    i = int(distribution.position_for(np.array([2 * u - 1]))[0])
    lower, upper = state.order[i], state.order[i + 1]
    if poset.closure[lower, upper]:
        return state

    order = list(state.order)
    order[i], order[i + 1] = upper, lower
    return LinearExtension(poset, order)


def run_chains(poset: PartialPreferenceOrder, uniforms: np.ndarray,
               distribution: Optional[SwapDistribution]=None, start: Optional[np.ndarray]=None) -> np.ndarray:
    """
    Run independent chains in lockstep

    @param   poset         Partial order
    @param   uniforms      One row of step uniforms per chain
    @param   distribution  Swap position distribution (derived if None)
    @param   start         States to continue from, one row per chain
                           (the minimal extension if None)
    @return  Final states (numpy.ndarray of shape (chains, m))
    """
    chains, steps = uniforms.shape
    if start is None:
        orders = np.tile(np.array(minimal_extension(poset).order, dtype=int), (chains, 1))
    else:
        orders = np.array(start, dtype=int)

    if poset.m < 2 or steps == 0:
        return orders

    if distribution is None:
        distribution = SwapDistribution.for_classes(poset.m)

    closure = poset.closure
    moving = uniforms >= 0.5
    positions = distribution.position_for(2 * uniforms - 1)
    rows = np.arange(chains)

    for t in range(steps):
        i = positions[:, t]
        lower = orders[rows, i]
        upper = orders[rows, i + 1]

        swap = moving[:, t] & ~closure[lower, upper]
        if swap.any():
            r, at = rows[swap], i[swap]
            orders[r, at] = upper[swap]
            orders[r, at + 1] = lower[swap]

    return orders


def advance_chains(poset: PartialPreferenceOrder, generators: Sequence[np.random.Generator], steps: int,
                   distribution: Optional[SwapDistribution]=None) -> np.ndarray:
    """
    Run one chain per generator from the minimal extension, each taking
    its step uniforms from its own generator a chunk at a time

    @param   poset         Partial order
    @param   generators    Random generator of each chain
    @param   steps         Steps per chain
    @param   distribution  Swap position distribution (derived if None)
    @return  Final states (numpy.ndarray of shape (chains, m))
    """
    orders = np.tile(np.array(minimal_extension(poset).order, dtype=int), (len(generators), 1))
    if poset.m < 2 or steps == 0:
        return orders

    if distribution is None:
        distribution = SwapDistribution.for_classes(poset.m)

    uniforms = np.empty((len(generators), min(steps, _STEP_CHUNK)))
    for done in range(0, steps, _STEP_CHUNK):
        width = min(_STEP_CHUNK, steps - done)
        for row, rng in enumerate(generators):
            uniforms[row, :width] = rng.random(width)

        orders = run_chains(poset, uniforms[:, :width], distribution, orders)

    return orders


def sample_extension(poset: PartialPreferenceOrder, config: SamplerConfig,
                     rng: np.random.Generator) -> LinearExtension:
    """
    One approximately uniform linear extension

    @param   poset   Partial order
    @param   config  Sampler settings
    @param   rng     Random generator
    @return  Linear extension
    """
    steps = mixing_steps(poset.m, config.epsilon, config.step_constant)
    return LinearExtension(poset, advance_chains(poset, [rng], steps)[0])


class ExtensionSampler(LogWriter, WorkerPool):
    """
    Independent approximately uniform linear extensions

    Draw j restarts the chain with its own stream (seed, j), so a run's
    draws do not depend on batching or on the number of workers.
    """
    def __init__(self, config: SamplerConfig, logger: Optional[logging.Logger]=None) -> None:
        """
        Constructor

        @param   config  Sampler settings
        @param   logger  Logger
        """
        super().__init__(logger=logger)
        self._config = config

        self.pool = shared_pool(config.workers)

    @property
    def workers(self) -> int:
        return self._config.workers

    @property
    def config(self) -> SamplerConfig:
        return self._config

    def steps(self, poset: PartialPreferenceOrder) -> int:
        return mixing_steps(poset.m, self._config.epsilon, self._config.step_constant)

    def _batch(self, poset: PartialPreferenceOrder, distribution: SwapDistribution,
               draws: range, steps: int) -> np.ndarray:
        generators = [stream(self._config.seed, draw) for draw in draws]
        return advance_chains(poset, generators, steps, distribution)

    def sample_orders(self, poset: PartialPreferenceOrder, count: int) -> np.ndarray:
        """
        Draws as rows of class numbers, least preferred first

        @param   poset  Partial order
        @param   count  Number of draws
        @return  Draws (numpy.ndarray of shape (count, m))
        """
        if count < 0:
            raise ValueError("Draw count must be non-negative")

        if poset.is_complete:
            # A single extension: nothing to sample
            start = np.array(minimal_extension(poset).order, dtype=int)
            return np.tile(start, (count, 1))

        steps = self.steps(poset)
        distribution = SwapDistribution.for_classes(poset.m)
        size = self._config.batch_size
        batches = [range(first, min(first + size, count)) for first in range(0, count, size)]

        self.log(logging.DEBUG, f"Sampling {count} extensions of {poset.m} classes "
                                f"with {steps} steps per draw")

        results = self.pool.map(lambda draws: self._batch(poset, distribution, draws, steps), batches)
        return np.concatenate(list(results)) if batches else np.empty((0, poset.m), dtype=int)

    def sample_many(self, poset: PartialPreferenceOrder, count: int) -> List[LinearExtension]:
        return [LinearExtension(poset, row) for row in self.sample_orders(poset, count)]


def sample_many(poset: PartialPreferenceOrder, count: int, config: SamplerConfig,
                logger: Optional[logging.Logger]=None) -> List[LinearExtension]:
    """
    Independent approximately uniform linear extensions

    @param   poset   Partial order
    @param   count   Number of draws
    @param   config  Sampler settings
    @param   logger  Logger
    @return  Linear extensions (list)
    """
    return ExtensionSampler(config, logger).sample_many(poset, count)
