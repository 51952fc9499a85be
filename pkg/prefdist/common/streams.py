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

import numpy as np


def stream(seed: int, *key: int) -> np.random.Generator:
    """
    Deterministic random stream for a seed and an index path

    Streams for distinct keys are statistically independent, so work
    split by index gives identical results for any number of workers.

    @param   seed  Root seed (int)
    @param   key   Index path (ints), e.g., draw or worker index
    @return  Random generator (numpy.random.Generator)
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=key))


def derive_seed(seed: int, *key: int) -> int:
    """
    Derive a child seed from a root seed and an index path

    @param   seed  Root seed (int)
    @param   key   Index path (ints)
    @return  Unsigned 64-bit child seed (int)
    """
    state = np.random.SeedSequence(seed, spawn_key=key).generate_state(1, np.uint64)
    return int(state[0])
