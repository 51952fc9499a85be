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

import csv
import os
from argparse import Namespace
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence

from prefdist.casebase import CaseBase, ElicitationSession, SessionLog, closest_set, nearest, parse_utility, \
                              read_casebase, write_session_csv
from prefdist.cli._types import ExitCode, RunContext, UnknownTarget, UsageError
from prefdist.cli._verify import SUITE_ALIASES, SUITES, run_suites, suite_names
from prefdist.common import SEED_ENV, EstimationMethod, EvaluationMode, MetricKind
from prefdist.config import PrefdistConfiguration
from prefdist.linext import ExtensionSampler, average_heights, count_extensions, enumerate_extensions
from prefdist.metrics import CSV_HEADER, DistanceEstimate, DistanceInterval, PartialDistanceEstimator, distance, \
                             normalized, utility_distance
from prefdist.metrics.partial import DEFAULT_HEIGHT_DRAWS
from prefdist.orders import LinearExtension, OrderError, OutcomeSpace, WeakOrder, parse_partial_order, \
                            parse_weak_order

Command = Callable[[Namespace, RunContext], ExitCode]


def apply_flags(config: PrefdistConfiguration, args: Namespace, environ: Mapping[str, str]=os.environ) -> None:
    """
    Override configuration values with command line flags; the seed falls
    back to the environment when no flag is given

    @param   config   Configuration tree
    @param   args     Parsed command line
    @param   environ  Environment variables
    """
    estimation = config.estimation

    seed = args.seed if args.seed is not None else environ.get(SEED_ENV)
    estimation.override("seed", seed)
    config.sampler.override("seed", seed)

    # The sampler's epsilon is a total variation target; elsewhere it
    # is the relative accuracy of an estimate
    if args.verb == "linext":
        config.sampler.override("epsilon", args.epsilon)
    else:
        estimation.override("epsilon", args.epsilon)

    estimation.override("confidence", args.confidence)
    estimation.override("samples", args.samples)
    estimation.override("workers", args.workers)

    if args.verb in ("nearest", "elicit"):
        config.elicitation.override("metric", args.metric)
        config.elicitation.override("policy", args.policy)
        config.elicitation.override("budget", getattr(args, "budget", None))


def output_format(args: Namespace) -> str:
    """ The requested format; session logs default to CSV """
    if args.format:
        return args.format

    return "csv" if args.verb == "elicit" else "text"


def _argument(text: str) -> str:
    """ An inline structure, or the content of the file named by @path """
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fp:
            return fp.read().strip()

    return text


def _declared(outcomes: Optional[str]) -> Optional[OutcomeSpace]:
    if outcomes is None:
        return None

    return OutcomeSpace(label.strip() for label in outcomes.split(","))


def _order_space(outcomes: Optional[str], texts: Iterable[str]) -> OutcomeSpace:
    """
    The declared outcome space or, failing that, every label mentioned
    across the orders in order of first appearance
    """
    declared = _declared(outcomes)
    if declared is not None:
        return declared

    labels: List[str] = []
    for text in texts:
        if text.strip():
            labels.extend(label for label in parse_partial_order(text).space if label not in labels)

    if not labels:
        raise UsageError("Cannot infer the outcomes of an empty order; declare them with --outcomes")

    return OutcomeSpace(labels)


def _as_complete(text: str, space: OutcomeSpace) -> Optional[WeakOrder]:
    """ The text as a complete order, or None if it leaves anything open """
    if ";" in text or not text.strip():
        return None

    try:
        return parse_weak_order(text, space)
    except OrderError:
        return None


def _describe(estimate: DistanceEstimate) -> str:
    description = f"{estimate.value:.6g}"

    if estimate.method == EstimationMethod.monte_carlo:
        description += f" [{estimate.interval_low:.6g}, {estimate.interval_high:.6g}] k={estimate.sample_count}"

    if estimate.degenerate:
        description += " (degenerate)"

    return description


def _writer(context: RunContext):
    return csv.writer(context.out, lineterminator="\n")


def _print(context: RunContext, line: str="") -> None:
    context.out.write(f"{line}\n")


def _report_estimate(args: Namespace, context: RunContext, kind: MetricKind, estimate: DistanceEstimate) -> None:
    if output_format(args) == "csv":
        writer = _writer(context)
        writer.writerow(CSV_HEADER)
        writer.writerow(estimate.csv_row(kind))
    else:
        _print(context, _describe(estimate))


def _report_interval(args: Namespace, context: RunContext, kind: MetricKind, interval: DistanceInterval) -> None:
    def _pair(witness) -> List[str]:
        return [repr(witness[0]), repr(witness[1])] if witness else ["", ""]

    if output_format(args) == "csv":
        writer = _writer(context)
        writer.writerow(["metric", "exact", "interval_low", "interval_high",
                         "low_first", "low_second", "high_first", "high_second"])
        writer.writerow([kind.value, "1" if interval.exact else "0", repr(interval.low), repr(interval.high),
                         *_pair(interval.low_witness), *_pair(interval.high_witness)])
        return

    _print(context, f"[{interval.low:.6g}, {interval.high:.6g}] {'exact' if interval.exact else 'sampled'}")
    for end, witness in (("low", interval.low_witness), ("high", interval.high_witness)):
        if witness:
            _print(context, f"{end}: {witness[0]!r} | {witness[1]!r}")


def _dist_utility(args: Namespace, context: RunContext, kind: MetricKind, first: str, second: str) -> ExitCode:
    if args.measure != "average" or args.top is not None or args.normalized:
        raise UsageError("Utility vectors support only the plain distance")

    space = _declared(args.outcomes)
    if space is None:
        space = OutcomeSpace(f"o{i + 1}" for i in range(len(first.split(","))))

    u1, u2 = parse_utility(first, space), parse_utility(second, space)
    _report_estimate(args, context, kind, utility_distance(kind, u1, u2, context.estimation, context.logger))
    return ExitCode.ok


def cmd_dist(args: Namespace, context: RunContext) -> ExitCode:
    """
    Distance between two complete or partial orders, or two utility
    vectors

    @param   args     Parsed command line
    @param   context  Run context
    @return  Exit status
    """
    first, second = _argument(args.first), _argument(args.second)
    kind = MetricKind(args.metric)

    if args.utility:
        return _dist_utility(args, context, kind, first, second)

    if args.top is not None and args.measure != "average":
        raise UsageError("--top applies to the average distance only")

    space = _order_space(args.outcomes, (first, second))
    o1, o2 = _as_complete(first, space), _as_complete(second, space)

    if o1 is not None and o2 is not None and args.measure == "average" and args.top is None:
        value = normalized(kind, o1, o2) if args.normalized else distance(kind, o1, o2)
        _report_estimate(args, context, kind, DistanceEstimate.exact(value, seed=context.estimation.seed))
        return ExitCode.ok

    if args.normalized:
        raise UsageError("--normalized applies to complete orders only")

    p1, p2 = parse_partial_order(first, space), parse_partial_order(second, space)
    estimator = PartialDistanceEstimator(context.estimation, context.sampler, context.caps, context.logger)
    mode = EvaluationMode(args.mode)

    if args.measure == "extreme":
        _report_interval(args, context, kind, estimator.extreme_interval(p1, p2, kind, mode))
        return ExitCode.ok

    if args.measure == "generalized":
        estimate = estimator.generalized(p1, p2, kind, mode)
    elif args.top is not None:
        estimate = estimator.topk_distance(p1, p2, kind, args.top, mode)
    else:
        estimate = estimator.avg_distance(p1, p2, kind, mode)

    _report_estimate(args, context, kind, estimate)
    return ExitCode.ok


def _report_extensions(args: Namespace, context: RunContext, extensions: Sequence[LinearExtension]) -> None:
    if output_format(args) == "csv":
        writer = _writer(context)
        writer.writerow(["extension"])
        writer.writerows([repr(extension)] for extension in extensions)
    else:
        for extension in extensions:
            _print(context, repr(extension))


def cmd_linext(args: Namespace, context: RunContext) -> ExitCode:
    """
    Count, enumerate or sample the linear extensions of a partial order,
    or report its average heights

    @param   args     Parsed command line
    @param   context  Run context
    @return  Exit status
    """
    text = _argument(args.order)
    poset = parse_partial_order(text, _order_space(args.outcomes, [text]))
    csv_output = output_format(args) == "csv"

    if args.action == "count":
        count = count_extensions(poset, context.caps.count_cap)
        if csv_output:
            _writer(context).writerows([["extensions"], [count]])
        else:
            _print(context, str(count))

    elif args.action == "enumerate":
        _report_extensions(args, context, enumerate_extensions(poset, context.caps.enumeration_cap))

    elif args.action == "sample":
        draws = 1 if args.draws is None else args.draws
        sampler = ExtensionSampler(context.sampler, context.logger)
        _report_extensions(args, context, sampler.sample_many(poset, draws))

    else:
        draws = DEFAULT_HEIGHT_DRAWS if args.draws is None else args.draws
        profile = average_heights(poset, context.sampler, EvaluationMode(args.mode), context.caps, draws,
                                  context.logger)
        if csv_output:
            writer = _writer(context)
            writer.writerow(["outcome", "height"])
            writer.writerows([label, repr(height)] for label, height in profile.as_dict().items())
        else:
            _print(context, repr(profile))

    return ExitCode.ok


def _retrieval_settings(context: RunContext):
    elicitation = context.config.elicitation
    return elicitation.metric, elicitation.policy


def cmd_nearest(args: Namespace, context: RunContext) -> ExitCode:
    """
    Rank a case base by distance from an elicited partial order, marking
    the closest set

    @param   args     Parsed command line
    @param   context  Run context
    @return  Exit status
    """
    cb = read_casebase(args.casebase)
    elicited = parse_partial_order(_argument(args.order), cb.space)
    kind, policy = _retrieval_settings(context)

    ranked = nearest(elicited, cb, kind, context.estimation, context.sampler, context.caps, context.logger)
    closest = closest_set(ranked, policy)

    if output_format(args) == "csv":
        writer = _writer(context)
        writer.writerow(["case", *CSV_HEADER, "closest"])
        for case in ranked:
            writer.writerow([case.name, *case.estimate.csv_row(kind), "1" if case.name in closest else "0"])
    else:
        for case in ranked:
            _print(context, f"{'*' if case.name in closest else ' '} {case.name}\t{_describe(case.estimate)}")

    return ExitCode.ok


def resolve_target(target: str, cb: CaseBase) -> WeakOrder:
    """
    The simulated user's order: a stored case by name, or an inline order

    @param   target  Case name or order text
    @param   cb      Case base
    @return  Complete order
    """
    if target in cb:
        return cb.order(target)

    if any(symbol in target for symbol in "<="):
        return parse_weak_order(target, cb.space)

    raise UnknownTarget(f"No case named \"{target}\" in the case base")


def _closest_names(names: Iterable[str], closest: Iterable[str]) -> str:
    closest = set(closest)
    return ", ".join(name for name in names if name in closest)


def _report_session(args: Namespace, context: RunContext, cb: CaseBase, log: SessionLog) -> None:
    final = _closest_names(cb.names(), log.final_closest)

    if output_format(args) == "csv":
        write_session_csv(log, cb, context.out)
        _print(context, f"# final_closest: {final}")
        return

    for number, step in enumerate(log.steps, start=1):
        a, b = step.query
        _print(context, f"{number}. {a} {step.answer.value} {b}: {len(step.closest)} closest "
                        f"({_closest_names(cb.names(), step.closest)})")

    _print(context, f"final closest: {final}")


def cmd_elicit(args: Namespace, context: RunContext) -> ExitCode:
    """
    Simulate incremental elicitation of a target order against a case
    base and log how the closest set narrows

    @param   args     Parsed command line
    @param   context  Run context
    @return  Exit status
    """
    cb = read_casebase(args.casebase)
    target = resolve_target(args.target, cb)
    kind, policy = _retrieval_settings(context)

    session = ElicitationSession(cb, kind, policy, context.estimation, context.sampler, context.caps,
                                 context.logger)
    log = session.run(target, context.config.elicitation.budget)

    _report_session(args, context, cb, log)
    return ExitCode.ok


def cmd_verify(args: Namespace, context: RunContext) -> ExitCode:
    """
    Run verification suites, printing each check with what was expected
    and what was found

    @param   args     Parsed command line
    @param   context  Run context
    @return  Exit status; failure if any check fails
    """
    names = suite_names(args.suite)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        known = [*SUITES, *SUITE_ALIASES]
        raise UsageError(f"Unknown suite {', '.join(unknown)}; expected one of {', '.join(known)}")

    checks = run_suites(names, context)

    if output_format(args) == "csv":
        writer = _writer(context)
        writer.writerow(["suite", "check", "expected", "actual", "passed"])
        writer.writerows([c.suite, c.name, c.expected, c.actual, "1" if c.passed else "0"] for c in checks)
    else:
        for check in checks:
            status = "PASS" if check.passed else "FAIL"
            _print(context, f"{status} {check.suite}: {check.name}; expected {check.expected}, got {check.actual}")

    failed = sum(not check.passed for check in checks)
    if context.logger:
        context.logger.info(f"{len(checks) - failed} of {len(checks)} checks passed")

    return ExitCode.verification_failed if failed else ExitCode.ok


COMMANDS: Dict[str, Command] = {
    "dist":    cmd_dist,
    "linext":  cmd_linext,
    "nearest": cmd_nearest,
    "elicit":  cmd_elicit,
    "verify":  cmd_verify
}


def run_command(args: Namespace, context: RunContext) -> ExitCode:
    return COMMANDS[args.verb](args, context)
