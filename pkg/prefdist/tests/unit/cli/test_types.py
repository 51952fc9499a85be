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

import configparser
import unittest

from prefdist.casebase import CaseBaseError
from prefdist.cli import ExitCode, RunManifest, UnknownTarget, UsageError, build_parser, exit_code
from prefdist.common import CapExceeded, PrefdistError, SpaceMismatch
from prefdist.config import PrefdistConfiguration
from prefdist.orders import CycleError, OrderSyntaxError


class TestParser(unittest.TestCase):
    def setUp(self):
        self.parser = build_parser()

    def test_dist_defaults(self):
        args = self.parser.parse_args(["dist", "a < b", "b < a"])

        self.assertEqual(args.verb, "dist")
        self.assertEqual(args.metric, "probabilistic")
        self.assertEqual(args.measure, "average")
        self.assertEqual(args.mode, "auto")
        self.assertFalse(args.normalized)
        self.assertIsNone(args.top)
        self.assertIsNone(args.seed)

    def test_common_flags_stay_raw(self):
        args = self.parser.parse_args(["linext", "count", "a < b", "--seed", "7", "--epsilon", "0.1"])

        self.assertEqual(args.seed, "7")
        self.assertEqual(args.epsilon, "0.1")

    def test_linext_order_optional(self):
        self.assertEqual(self.parser.parse_args(["linext", "count", "--outcomes", "a,b"]).order, "")

    def test_repeated_suites(self):
        args = self.parser.parse_args(["verify", "--suite", "orders", "--suite", "chebyshev"])
        self.assertEqual(args.suite, ["orders", "chebyshev"])

    def test_usage_errors(self):
        for argv in ([], ["frobnicate"], ["dist", "a < b"], ["dist", "a", "b", "--metric", "kendall"],
                     ["linext", "shuffle"], ["nearest", "a < b"], ["elicit", "--casebase", "x"]):
            with self.assertRaises(SystemExit) as context:
                self.parser.parse_args(argv)

            self.assertEqual(context.exception.code, 2)


class TestExitCodes(unittest.TestCase):
    def test_mapping(self):
        self.assertEqual(exit_code(UnknownTarget("x")), ExitCode.unknown_target)
        self.assertEqual(exit_code(SpaceMismatch("x")), ExitCode.incompatible)
        self.assertEqual(exit_code(CapExceeded("x")), ExitCode.cap_exceeded)

        for error in (UsageError("x"), OrderSyntaxError("x"), CycleError("x"), CaseBaseError("x"),
                      configparser.ParsingError("x"), ValueError("x"), FileNotFoundError("x")):
            self.assertEqual(exit_code(error), ExitCode.usage, error)

    def test_unexpected(self):
        self.assertIsNone(exit_code(RuntimeError("x")))
        self.assertIsNone(exit_code(PrefdistError("x")))

    def test_values(self):
        self.assertEqual([code.value for code in ExitCode], [0, 1, 2, 3, 4, 5])


class TestRunManifest(unittest.TestCase):
    def test_header(self):
        manifest = RunManifest.for_run(["dist", "a < b", "b < a"], PrefdistConfiguration(), 1.23456)
        lines = manifest.header_lines()

        self.assertEqual(lines[0], "# command: prefdist dist 'a < b' 'b < a'")
        self.assertEqual(lines[1], "# seed: 0")
        self.assertTrue(lines[2].startswith("# version: "))
        self.assertTrue(lines[3].startswith("# config: {"))
        self.assertEqual(lines[4], "# elapsed: 1.235s")
        self.assertTrue(all(line.startswith("# ") for line in lines))


if __name__ == "__main__":
    unittest.main()
