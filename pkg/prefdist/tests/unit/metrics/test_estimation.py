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
import unittest

import numpy as np

from prefdist.common import EstimationMethod
from prefdist.metrics import EstimationConfig, chebyshev_interval, chebyshev_sample_size, choose_sample_size, \
                             summarise


class TestChebyshevSampleSize(unittest.TestCase):
    def test_sizes(self):
        self.assertEqual(chebyshev_sample_size(100, 1, 0.1), 40000)
        self.assertEqual(chebyshev_sample_size(2, 1, 1), 8)
        self.assertEqual(chebyshev_sample_size(10, 0.5, 0.05), 8000)
        self.assertEqual(chebyshev_sample_size(20, 0.01, 0.01), 8000)

    def test_invalid(self):
        self.assertRaises(ValueError, chebyshev_sample_size, 1, 1, 0.1)
        self.assertRaises(ValueError, chebyshev_sample_size, 20, 0, 0.1)
        self.assertRaises(ValueError, chebyshev_sample_size, 20, 1, 0)
        self.assertRaises(ValueError, chebyshev_sample_size, 20, 1, 1.5)


class TestChebyshevInterval(unittest.TestCase):
    def test_fixed_tau(self):
        low, high = chebyshev_interval(0.5, 0.0, 100, 4, tau=1)

        self.assertAlmostEqual(low, 0.4)
        self.assertAlmostEqual(high, 0.6)

    def test_clamped(self):
        low, high = chebyshev_interval(0.5, 0.25, 4, 20)

        self.assertEqual(low, 0.0)
        self.assertAlmostEqual(high, 0.5 + 0.5 * math.sqrt(20 * 1.0 / 4))

    def test_zero_mean(self):
        self.assertEqual(chebyshev_interval(0.0, 0.0, 10, 20), (0.0, 0.0))


class TestSampleSize(unittest.TestCase):
    def _never(self, count: int) -> np.ndarray:
        raise AssertionError("No pilot run expected")

    def test_explicit(self):
        self.assertEqual(choose_sample_size(EstimationConfig(sample_count=123), self._never), 123)

    def test_fixed_tau(self):
        config = EstimationConfig(confidence=100, tau=1, epsilon=0.1)
        self.assertEqual(choose_sample_size(config, self._never), 40000)

    def test_capped(self):
        config = EstimationConfig(confidence=100, tau=1, epsilon=0.1, max_samples=1000)
        self.assertEqual(choose_sample_size(config, self._never), 1000)

    def test_pilot(self):
        pilots = []

        def _pilot(count: int) -> np.ndarray:
            pilots.append(count)
            return np.ones(count)

        # A constant pilot falls back to the tau floor
        self.assertEqual(choose_sample_size(EstimationConfig(pilot_samples=50), _pilot), 8000)
        self.assertEqual(pilots, [50])


class TestSummarise(unittest.TestCase):
    def test_summary(self):
        estimate = summarise(np.array([0.0, 1.0, 0.0, 1.0]), EstimationConfig(seed=3))

        self.assertEqual(estimate.value, 0.5)
        self.assertEqual(estimate.sample_count, 4)
        self.assertAlmostEqual(estimate.sample_variance, 1 / 3)
        self.assertAlmostEqual(estimate.standard_error, math.sqrt(1 / 12))
        self.assertEqual(estimate.interval_low, 0.0)
        self.assertGreater(estimate.interval_high, 0.5)
        self.assertEqual(estimate.method, EstimationMethod.monte_carlo)
        self.assertEqual(estimate.seed, 3)
        self.assertFalse(estimate.degenerate)

    def test_empty(self):
        self.assertRaises(ValueError, summarise, np.array([]), EstimationConfig())


if __name__ == "__main__":
    unittest.main()
