from prefdist.cli._types import ExitCode, RunContext, RunManifest, UnknownTarget, UsageError, exit_code
from prefdist.cli._parser import build_parser
from prefdist.cli._verify import SUITES, Check, all_partial_orders, random_poset, random_weak_order, run_suites
from prefdist.cli._commands import COMMANDS, apply_flags, cmd_dist, cmd_elicit, cmd_linext, cmd_nearest, \
                                   cmd_verify, output_format, resolve_target, run_command
