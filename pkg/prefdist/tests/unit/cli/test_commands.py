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

import io
import os
import unittest
from argparse import Namespace
from tempfile import TemporaryDirectory
from typing import List, Mapping, Tuple

from prefdist.cli import ExitCode, RunContext, UnknownTarget, UsageError, apply_flags, build_parser, output_format, \
                         resolve_target, run_command
from prefdist.cli._verify import SUITES, suite_names
from prefdist.casebase import load_casebase
from prefdist.common import CapExceeded, ClosenessPolicy, MetricKind
from prefdist.config import PrefdistConfiguration
from prefdist.orders import OrderError

CASEBASE = """outcomes: B, M, P
Quinn | order | B < M < P
Robin | order | M < P < B
Sasha | order | P < M < B
"""


def _parse(argv: List[str], environ: Mapping[str, str]=None) -> Tuple[Namespace, PrefdistConfiguration]:
    args = build_parser().parse_args(argv)
    config = PrefdistConfiguration()
    apply_flags(config, args, environ or {})
    return args, config


def _run(argv: List[str]) -> Tuple[ExitCode, str]:
    args, config = _parse(argv)
    out = io.StringIO()
    code = run_command(args, RunContext.from_config(config, out))
    return code, out.getvalue()


class TestApplyFlags(unittest.TestCase):
    def test_seed(self):
        _, config = _parse(["dist", "a", "a", "--seed", "42"])

        self.assertEqual(config.estimation.seed, 42)
        self.assertEqual(config.sampler.seed, 42)

    def test_seed_from_environment(self):
        _, config = _parse(["dist", "a", "a"], {"PREFDIST_SEED": "9"})
        self.assertEqual(config.estimation.seed, 9)

        _, config = _parse(["dist", "a", "a", "--seed", "3"], {"PREFDIST_SEED": "9"})
        self.assertEqual(config.estimation.seed, 3)

    def test_epsilon_target(self):
        _, config = _parse(["linext", "sample", "a < b", "--epsilon", "0.2"])
        self.assertEqual(config.sampler.epsilon, 0.2)
        self.assertEqual(config.estimation.epsilon, 0.01)

        _, config = _parse(["dist", "a", "a", "--epsilon", "0.2"])
        self.assertEqual(config.sampler.epsilon, 0.01)
        self.assertEqual(config.estimation.epsilon, 0.2)

    def test_estimation_flags(self):
        _, config = _parse(["dist", "a", "a", "--samples", "500", "--confidence", "50", "--workers", "2"])

        self.assertEqual(config.estimation.samples, 500)
        self.assertEqual(config.estimation.confidence, 50.0)
        self.assertEqual(config.estimation.workers, 2)

    def test_retrieval_flags(self):
        _, config = _parse(["elicit", "--casebase", "x", "--target", "y", "--metric", "footrule",
                            "--policy", "minimax", "--budget", "3"])

        self.assertEqual(config.elicitation.metric, MetricKind.footrule)
        self.assertEqual(config.elicitation.policy, ClosenessPolicy.minimax)
        self.assertEqual(config.elicitation.budget, 3)

    def test_invalid_values(self):
        self.assertRaises(Exception, _parse, ["dist", "a", "a", "--seed", "-1"])
        self.assertRaises(Exception, _parse, ["dist", "a", "a", "--confidence", "1"])

    def test_output_format(self):
        self.assertEqual(output_format(_parse(["dist", "a", "a"])[0]), "text")
        self.assertEqual(output_format(_parse(["elicit", "--casebase", "x", "--target", "y"])[0]), "csv")
        self.assertEqual(output_format(_parse(["dist", "a", "a", "--format", "csv"])[0]), "csv")


class TestDist(unittest.TestCase):
    def test_complete_orders(self):
        self.assertEqual(_run(["dist", "B<M<P", "M<P<B"]), (ExitCode.ok, "0.666667\n"))
        self.assertEqual(_run(["dist", "B<M<P", "M<P<B", "--metric", "footrule"])[1], "2\n")
        self.assertEqual(_run(["dist", "B<M<P", "M<P<B", "--metric", "euclidean", "--normalized"])[1],
                         "0.866025\n")

    def test_csv(self):
        code, out = _run(["dist", "B<M<P", "P<M<B", "--metric", "footrule", "--format", "csv"])
        lines = out.splitlines()

        self.assertEqual(code, ExitCode.ok)
        self.assertEqual(lines[0], "metric,method,value,k,variance,interval_low,interval_high,seed")
        self.assertEqual(lines[1], "footrule,exact,2.0,0,0.0,2.0,2.0,0")

    def test_partial_orders(self):
        self.assertEqual(_run(["dist", "a < c; b < c", "a < b < c", "--metric", "footrule"])[1], "0.5\n")
        self.assertEqual(_run(["dist", "a < c; b < c", "a < b < c", "--metric", "footrule",
                               "--measure", "generalized"])[1], "0.5\n")

    def test_extreme(self):
        code, out = _run(["dist", "a < c; b < c", "a < b < c", "--metric", "footrule", "--measure", "extreme"])

        self.assertEqual(out.splitlines(), ["[0, 1] exact", "low: a < b < c | a < b < c",
                                            "high: b < a < c | a < b < c"])

    def test_top(self):
        self.assertEqual(_run(["dist", "a < b < c < d", "b < a < c < d", "--top", "2"])[1], "0\n")
        self.assertEqual(_run(["dist", "a < b < c < d", "a < b < d < c", "--top", "2"])[1], "1\n")

    def test_utility(self):
        self.assertEqual(_run(["dist", "--utility", "--metric", "footrule", "0,1,2", "1,3,4"])[1], "0.0833333\n")

        code, out = _run(["dist", "--utility", "0,1,2", "0,2,1", "--samples", "2000", "--seed", "7"])
        self.assertIn("k=2000", out)

    def test_usage(self):
        self.assertRaises(UsageError, _run, ["dist", "a < c; b < c", "a < b < c", "--normalized"])
        self.assertRaises(UsageError, _run, ["dist", "--utility", "0,1", "1,0", "--normalized"])
        self.assertRaises(UsageError, _run, ["dist", "a < b", "b < a", "--top", "1", "--measure", "extreme"])
        self.assertRaises(UsageError, _run, ["dist", "", ""])
        self.assertRaises(OrderError, _run, ["dist", "a < < b", "a < b"])

    def test_order_files(self):
        with TemporaryDirectory() as directory:
            path = os.path.join(directory, "order.txt")
            with open(path, "w") as fp:
                fp.write("B < M < P\n")

            self.assertEqual(_run(["dist", f"@{path}", "M<P<B"])[1], "0.666667\n")


class TestLinext(unittest.TestCase):
    def test_count(self):
        self.assertEqual(_run(["linext", "count", "a < c; b < c"]), (ExitCode.ok, "2\n"))
        self.assertEqual(_run(["linext", "count", "--outcomes", "a,b,c,d"])[1], "24\n")

    def test_enumerate(self):
        out = _run(["linext", "enumerate", "a < c; b < c", "--outcomes", "a,b,c"])[1]
        self.assertEqual(out, "a < b < c\nb < a < c\n")

        lines = _run(["linext", "enumerate", "a < c; b < c", "--outcomes", "a,b,c", "--format", "csv"])[1].splitlines()
        self.assertEqual(lines, ["extension", "a < b < c", "b < a < c"])

    def test_sample(self):
        out = _run(["linext", "sample", "a < c; b < c", "--draws", "5", "--seed", "3"])[1]

        lines = out.splitlines()
        self.assertEqual(len(lines), 5)
        self.assertTrue(set(lines) <= {"a < b < c", "b < a < c"})
        self.assertEqual(out, _run(["linext", "sample", "a < c; b < c", "--draws", "5", "--seed", "3"])[1])

    def test_heights(self):
        self.assertEqual(_run(["linext", "heights", "a < c; b < c", "--outcomes", "a,b,c"])[1], "a=1.5 b=1.5 c=3\n")

    def test_caps(self):
        labels = ",".join(f"o{i}" for i in range(21))
        self.assertRaises(CapExceeded, _run, ["linext", "count", "--outcomes", labels])
        self.assertRaises(UsageError, _run, ["linext", "count"])


class TestCaseBaseCommands(unittest.TestCase):
    def setUp(self):
        self.directory = TemporaryDirectory()
        self.casebase = os.path.join(self.directory.name, "cases.txt")
        with open(self.casebase, "w") as fp:
            fp.write(CASEBASE)

    def tearDown(self):
        self.directory.cleanup()

    def test_nearest(self):
        code, out = _run(["nearest", "B < M < P", "--casebase", self.casebase])

        self.assertEqual(code, ExitCode.ok)
        self.assertEqual(out.splitlines(), ["* Quinn\t0", "  Robin\t0.666667", "  Sasha\t1"])

    def test_nearest_csv(self):
        lines = _run(["nearest", "", "--casebase", self.casebase, "--format", "csv"])[1].splitlines()

        self.assertEqual(lines[0], "case,metric,method,value,k,variance,interval_low,interval_high,seed,closest")
        self.assertEqual(len(lines), 4)
        self.assertTrue(all(line.endswith(",1") for line in lines[1:]))

    def test_resolve_target(self):
        cb = load_casebase(CASEBASE)

        self.assertEqual(repr(resolve_target("Robin", cb)), "M < P < B")
        self.assertEqual(repr(resolve_target("P < B < M", cb)), "P < B < M")
        self.assertRaises(UnknownTarget, resolve_target, "Walter", cb)

    def test_elicit(self):
        code, out = _run(["elicit", "--casebase", self.casebase, "--target", "Quinn", "--format", "text"])

        self.assertEqual(code, ExitCode.ok)
        self.assertEqual(out.splitlines()[0], "1. B < M: 1 closest (Quinn)")
        self.assertEqual(out.splitlines()[-1], "final closest: Quinn")

    def test_elicit_csv(self):
        lines = _run(["elicit", "--casebase", self.casebase, "--target", "Quinn", "--budget", "1"])[1].splitlines()

        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[0].startswith("step,"))
        self.assertEqual(lines[-1], "# final_closest: Quinn")

    def test_unknown_target(self):
        self.assertRaises(UnknownTarget, _run, ["elicit", "--casebase", self.casebase, "--target", "Walter"])


class TestVerify(unittest.TestCase):
    def test_chebyshev_suite(self):
        code, out = _run(["verify", "--suite", "chebyshev"])

        self.assertEqual(code, ExitCode.ok)
        self.assertEqual(len(out.splitlines()), 3)
        self.assertTrue(all(line.startswith("PASS chebyshev") for line in out.splitlines()))

    def test_example_suites(self):
        code, out = _run(["verify", "--suite", "orders", "--suite", "utilities", "--format", "csv"])
        lines = out.splitlines()

        self.assertEqual(code, ExitCode.ok)
        self.assertEqual(lines[0], "suite,check,expected,actual,passed")
        self.assertTrue(all(line.endswith(",1") for line in lines[1:]))

    def test_suite_aliases(self):
        code, out = _run(["verify", "--suite", "example1"])
        _, canonical = _run(["verify", "--suite", "orders"])

        self.assertEqual(code, ExitCode.ok)
        self.assertEqual(out, canonical)
        self.assertTrue(all(line.startswith("PASS orders:") for line in out.splitlines()))

        code, out = _run(["verify", "--suite", "example3", "--suite", "prospects"])
        lines = out.splitlines()

        self.assertEqual(code, ExitCode.ok)
        self.assertEqual(len(lines), 2)
        self.assertTrue(all(line.startswith("PASS prospects:") for line in lines))

    def test_suite_names(self):
        self.assertEqual(suite_names(["example2", "utilities", "linext"]), ["utilities", "linext"])
        self.assertEqual(suite_names(None), list(SUITES))
        self.assertEqual(suite_names(["bogus"]), ["bogus"])

    def test_unknown_suite(self):
        self.assertRaises(UsageError, _run, ["verify", "--suite", "nonsense"])


if __name__ == "__main__":
    unittest.main()
