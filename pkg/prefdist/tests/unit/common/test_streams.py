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

import unittest

import numpy as np

from prefdist.common import derive_seed, stream


class TestStreams(unittest.TestCase):
    def test_reproducible(self):
        np.testing.assert_array_equal(stream(7, 1, 2).random(10), stream(7, 1, 2).random(10))

    def test_keys_are_independent(self):
        self.assertFalse(np.array_equal(stream(7, 1).random(10), stream(7, 2).random(10)))
        self.assertFalse(np.array_equal(stream(7).random(10), stream(8).random(10)))

    def test_derive_seed(self):
        seed = derive_seed(7, 3)

        self.assertEqual(seed, derive_seed(7, 3))
        self.assertNotEqual(seed, derive_seed(7, 4))
        self.assertTrue(0 <= seed < 2**64)


if __name__ == "__main__":
    unittest.main()
