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

from prefdist.common import MetricKind

# Rows processed at once by the pairwise kernel
_CHUNK = 2048


def footrule_rows(h1: np.ndarray, h2: np.ndarray) -> np.ndarray:
    return 0.5 * np.abs(h1 - h2).sum(axis=-1)


def euclidean_rows(h1: np.ndarray, h2: np.ndarray) -> np.ndarray:
    return np.sqrt(np.square(h1 - h2).sum(axis=-1))


def discordance_rows(h1: np.ndarray, h2: np.ndarray) -> np.ndarray:
    """
    Share of outcome pairs on which two rows of levels conflict

    A pair conflicts exactly when the two rows order it differently,
    counting a tie against a strict preference as different.

    @param   h1  Levels (numpy.ndarray of shape (k, n))
    @param   h2  Levels (numpy.ndarray of shape (k, n))
    @return  Distances (numpy.ndarray of shape (k,))
    """
    h1, h2 = np.atleast_2d(h1), np.atleast_2d(h2)
    rows, n = h1.shape
    result = np.zeros(rows)

    if n < 2:
        return result

    lower, upper = np.triu_indices(n, 1)
    for start in range(0, rows, _CHUNK):
        chunk = slice(start, start + _CHUNK)
        s1 = np.sign(h1[chunk][:, upper] - h1[chunk][:, lower])
        s2 = np.sign(h2[chunk][:, upper] - h2[chunk][:, lower])
        result[chunk] = np.count_nonzero(s1 != s2, axis=1) / len(lower)

    return result


_KERNELS = {
    MetricKind.footrule:      footrule_rows,
    MetricKind.euclidean:     euclidean_rows,
    MetricKind.probabilistic: discordance_rows
}


def distance_rows(kind: MetricKind, h1: np.ndarray, h2: np.ndarray) -> np.ndarray:
    """
    Base metric between corresponding rows of two height matrices

    @param   kind  Metric
    @param   h1    Heights (numpy.ndarray of shape (k, n))
    @param   h2    Heights (numpy.ndarray of shape (k, n))
    @return  Distances (numpy.ndarray of shape (k,))
    """
    return _KERNELS[kind](np.atleast_2d(h1), np.atleast_2d(h2))
