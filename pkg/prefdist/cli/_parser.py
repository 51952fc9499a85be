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

from argparse import ArgumentParser

from prefdist import __version__
from prefdist.common import ClosenessPolicy, EvaluationMode, MetricKind

MEASURES = ("average", "generalized", "extreme")
LINEXT_ACTIONS = ("count", "enumerate", "sample", "heights")
FORMATS = ("text", "csv")


def _common_flags() -> ArgumentParser:
    # Numeric flags stay strings: they are canonicalised by the
    # configuration layer, exactly as if read from file
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", help="configuration file (default $PREFDIST_CONF or ~/prefdist.conf)")
    common.add_argument("--seed", help="root random seed (default $PREFDIST_SEED or 0)")
    common.add_argument("--epsilon", help="relative accuracy for estimates; total variation for linext")
    common.add_argument("--confidence", help="Chebyshev constant c > 1")
    common.add_argument("--samples", help="sample count, or \"auto\" for Chebyshev sizing")
    common.add_argument("--workers", help="worker threads (results do not depend on it)")
    common.add_argument("--mode", choices=[m.value for m in EvaluationMode], default=EvaluationMode.auto.value,
                        help="exact, sampled, or exact when within budget (default)")
    common.add_argument("--format", choices=FORMATS, help="output format")
    common.add_argument("--output", help="write results to this file instead of standard output")
    common.add_argument("--outcomes", help="comma-separated outcome labels, in declaration order")
    return common


def build_parser() -> ArgumentParser:
    """
    Command line parser for every verb

    @return  Argument parser
    """
    common = _common_flags()
    metrics = [kind.value for kind in MetricKind]
    policies = [policy.value for policy in ClosenessPolicy]

    parser = ArgumentParser(prog="prefdist", description="Distances between preference structures")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    dist = verbs.add_parser("dist", parents=[common], help="distance between two orders or utilities")
    dist.add_argument("first", help="order, utility vector, or @file")
    dist.add_argument("second", help="order, utility vector, or @file")
    dist.add_argument("--metric", choices=metrics, default=MetricKind.probabilistic.value)
    dist.add_argument("--normalized", action="store_true", help="divide by the upper bound (complete orders)")
    dist.add_argument("--utility", action="store_true", help="inputs are utility vectors")
    dist.add_argument("--measure", choices=MEASURES, default="average",
                      help="for partial orders: average-case, height-based or extreme-case distance")
    dist.add_argument("--top", type=int, help="compare only the union of both orders' top outcomes")

    linext = verbs.add_parser("linext", parents=[common], help="linear extensions of a partial order")
    linext.add_argument("action", choices=LINEXT_ACTIONS)
    linext.add_argument("order", nargs="?", default="", help="partial order, or @file (default: none)")
    linext.add_argument("--draws", type=int, help="extensions to sample")

    nearest = verbs.add_parser("nearest", parents=[common], help="rank a case base against an elicited order")
    nearest.add_argument("order", nargs="?", default="", help="elicited partial order, or @file")
    nearest.add_argument("--casebase", required=True, help="case base file")
    nearest.add_argument("--metric", choices=metrics)
    nearest.add_argument("--policy", choices=policies)

    elicit = verbs.add_parser("elicit", parents=[common], help="simulate incremental elicitation")
    elicit.add_argument("--casebase", required=True, help="case base file")
    elicit.add_argument("--target", required=True, help="stored case name, or the simulated user's order")
    elicit.add_argument("--budget", help="maximum number of queries")
    elicit.add_argument("--metric", choices=metrics)
    elicit.add_argument("--policy", choices=policies)

    verify = verbs.add_parser("verify", parents=[common], help="run the built-in verification suites")
    verify.add_argument("--suite", action="append", help="suite to run (repeatable; default all)")

    return parser
