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

import os
import unittest

import prefdist.common.canon as canon
from prefdist.common import ClosenessPolicy, MetricKind


class TestCanonicalPath(unittest.TestCase):
    """
    This is just the composition of standard library functions, so we
    presume it not to require exhaustive testing. As such, we just test
    the functional components individually to show that the composition
    has no effect on the outcome.
    """
    def test_user_expansion(self):
        self.assertEqual(canon.path("~"), os.path.expanduser("~"))

    def test_path_normalisation(self):
        for case in ["/A//B", "/A/B/", "/A/./B", "/A/foo/../B"]:
            self.assertEqual(canon.path(case), os.path.normpath(case))

    def test_abs_path(self):
        self.assertEqual(canon.path("/foo"), "/foo")
        self.assertEqual(canon.path("foo"), os.path.normpath(os.path.join(os.getcwd(), "foo")))


class TestCanonicalNumbers(unittest.TestCase):
    def test_real(self):
        self.assertRaises(ValueError, canon.real, "foo")
        self.assertRaises(ValueError, canon.real, "inf")
        self.assertRaises(ValueError, canon.real, "nan")
        self.assertRaises(ValueError, canon.real, "1.2.3")

        self.assertEqual(canon.real("1"),       1.0)
        self.assertEqual(canon.real(" 1.5 "),   1.5)
        self.assertEqual(canon.real("-.25"),    -0.25)
        self.assertEqual(canon.real("3."),      3.0)
        self.assertEqual(canon.real("1e-2"),    0.01)
        self.assertEqual(canon.real("2E3"),     2000.0)

    def test_integer(self):
        self.assertRaises(ValueError, canon.integer, "foo")
        self.assertRaises(ValueError, canon.integer, "1.0")

        self.assertEqual(canon.integer("12"),   12)
        self.assertEqual(canon.integer(" -3 "), -3)

    def test_positive_int(self):
        self.assertRaises(ValueError, canon.positive_int, "0")
        self.assertRaises(ValueError, canon.positive_int, "-1")
        self.assertEqual(canon.positive_int("1"), 1)

    def test_non_negative_int(self):
        self.assertRaises(ValueError, canon.non_negative_int, "-1")
        self.assertEqual(canon.non_negative_int("0"), 0)

    def test_seed(self):
        self.assertRaises(ValueError, canon.seed, "-1")
        self.assertRaises(ValueError, canon.seed, str(2**64))
        self.assertEqual(canon.seed("0"), 0)
        self.assertEqual(canon.seed(str(2**64 - 1)), 2**64 - 1)

    def test_positive_real(self):
        self.assertRaises(ValueError, canon.positive_real, "0")
        self.assertRaises(ValueError, canon.positive_real, "-0.5")
        self.assertEqual(canon.positive_real("0.5"), 0.5)

    def test_open_unit_interval(self):
        self.assertRaises(ValueError, canon.open_unit_interval, "0")
        self.assertRaises(ValueError, canon.open_unit_interval, "1")
        self.assertEqual(canon.open_unit_interval("0.01"), 0.01)

    def test_confidence(self):
        self.assertRaises(ValueError, canon.confidence, "1")
        self.assertRaises(ValueError, canon.confidence, "0.5")
        self.assertEqual(canon.confidence("20"), 20.0)


class TestCanonicalDeferred(unittest.TestCase):
    def test(self):
        samples = canon.deferred(canon.positive_int)

        self.assertIsNone(samples("auto"))
        self.assertIsNone(samples(" AUTO "))
        self.assertIsNone(samples("plugin"))
        self.assertEqual(samples("100"), 100)
        self.assertRaises(ValueError, samples, "0")
        self.assertRaises(ValueError, samples, "sometimes")


class TestCanonicalEnumerations(unittest.TestCase):
    def test_metric_kind(self):
        self.assertEqual(canon.metric_kind("footrule"), MetricKind.footrule)
        self.assertEqual(canon.metric_kind(" Probabilistic "), MetricKind.probabilistic)
        self.assertRaises(ValueError, canon.metric_kind, "kendall")

    def test_closeness_policy(self):
        self.assertEqual(canon.closeness_policy("minimax"), ClosenessPolicy.minimax)
        self.assertRaises(ValueError, canon.closeness_policy, "optimistic")


if __name__ == "__main__":
    unittest.main()
