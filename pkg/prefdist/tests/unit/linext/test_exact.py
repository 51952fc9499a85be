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

from prefdist.common import CapExceeded
from prefdist.linext import count_extensions, enumerate_extensions, exact_class_offsets, extension_orders, \
                            minimal_extension, position_distribution, precedence_probabilities
from prefdist.orders import OutcomeSpace, PartialPreferenceOrder, parse_partial_order, parse_weak_order, as_partial


def _antichain(m: int) -> PartialPreferenceOrder:
    return PartialPreferenceOrder.vacuous(OutcomeSpace(f"o{i}" for i in range(m)))


class TestCounting(unittest.TestCase):
    def test_small_posets(self):
        self.assertEqual(count_extensions(parse_partial_order("a < c; b < c")), 2)
        self.assertEqual(count_extensions(parse_partial_order("a < b; c < d")), 6)
        self.assertEqual(count_extensions(parse_partial_order("a = b; c")), 2)
        self.assertEqual(count_extensions(as_partial(parse_weak_order("a < b < c < d"))), 1)

    def test_antichains(self):
        for m in range(1, 9):
            self.assertEqual(count_extensions(_antichain(m)), math.factorial(m))

    def test_matches_enumeration(self):
        for text in ["a < c; b < c", "a < b; c < d", "a < b; a < c; d", "a = b; c < d; e"]:
            poset = parse_partial_order(text)
            self.assertEqual(count_extensions(poset), len(enumerate_extensions(poset)))

    def test_caps(self):
        self.assertRaises(CapExceeded, count_extensions, _antichain(4), 3)
        self.assertRaises(CapExceeded, enumerate_extensions, _antichain(4), 3)
        self.assertEqual(count_extensions(_antichain(3), 3), 6)


class TestEnumeration(unittest.TestCase):
    def test_lexicographic(self):
        poset = parse_partial_order("a < c; b < c", OutcomeSpace("abc"))

        np.testing.assert_array_equal(extension_orders(poset), [[0, 1, 2], [1, 0, 2]])
        self.assertEqual([repr(e) for e in enumerate_extensions(poset)], ["a < b < c", "b < a < c"])

    def test_distinct(self):
        extensions = enumerate_extensions(_antichain(4))
        self.assertEqual(len(set(extensions)), 24)

    def test_minimal_extension(self):
        self.assertEqual(minimal_extension(parse_partial_order("c < a", OutcomeSpace("abc"))).order, (1, 2, 0))
        self.assertEqual(minimal_extension(_antichain(3)).order, (0, 1, 2))


class TestExactDistributions(unittest.TestCase):
    def test_positions(self):
        positions = position_distribution(parse_partial_order("a < c; b < c", OutcomeSpace("abc")))

        np.testing.assert_allclose(positions[0], [0.5, 0.5, 0.0])
        np.testing.assert_allclose(positions[1], [0.5, 0.5, 0.0])
        np.testing.assert_allclose(positions[2], [0.0, 0.0, 1.0])
        np.testing.assert_allclose(positions.sum(axis=1), 1.0)

    def test_class_offsets(self):
        np.testing.assert_allclose(exact_class_offsets(parse_partial_order("a = b; c")), [0.5, 1.0])

    def test_precedence(self):
        precedence = precedence_probabilities(parse_partial_order("a < c; b < c", OutcomeSpace("abc")))

        self.assertAlmostEqual(precedence[0, 1], 0.5)
        self.assertAlmostEqual(precedence[0, 2], 1.0)
        self.assertAlmostEqual(precedence[2, 0], 0.0)
        np.testing.assert_allclose(precedence + precedence.T, 1 - np.eye(3))


if __name__ == "__main__":
    unittest.main()
