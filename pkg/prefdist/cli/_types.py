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

import logging
import shlex
from configparser import Error as ConfigError
from enum import IntEnum
from typing import IO, List, NamedTuple, Optional, Sequence

from prefdist import __version__
from prefdist.casebase import CaseBaseError
from prefdist.common import CapExceeded, PrefdistError, SpaceMismatch
from prefdist.config import PrefdistConfiguration, dump_configuration
from prefdist.linext import LinextCaps, SamplerConfig
from prefdist.metrics import EstimationConfig
from prefdist.orders import OrderError


class ExitCode(IntEnum):
    """ Process exit statuses """
    ok = 0
    verification_failed = 1
    usage = 2
    incompatible = 3
    cap_exceeded = 4
    unknown_target = 5


class UsageError(PrefdistError):
    """ Raised for flag combinations or inputs a command cannot use """


class UnknownTarget(PrefdistError):
    """ Raised when an elicitation target is neither a case nor an order """


def exit_code(error: BaseException) -> Optional[ExitCode]:
    """
    Exit status for an error, or None when it is not an expected failure

    @param   error  Raised exception
    @return  Exit status (ExitCode)
    """
    if isinstance(error, UnknownTarget):
        return ExitCode.unknown_target

    if isinstance(error, SpaceMismatch):
        return ExitCode.incompatible

    if isinstance(error, CapExceeded):
        return ExitCode.cap_exceeded

    if isinstance(error, (UsageError, OrderError, CaseBaseError, ConfigError, ValueError, OSError)):
        return ExitCode.usage

    return None


class RunContext(NamedTuple):
    """ Everything a command needs besides its arguments """
    config: PrefdistConfiguration
    estimation: EstimationConfig
    sampler: SamplerConfig
    caps: LinextCaps
    out: IO[str]
    logger: Optional[logging.Logger] = None

    @classmethod
    def from_config(cls, config: PrefdistConfiguration, out: IO[str],
                    logger: Optional[logging.Logger]=None) -> "RunContext":
        return cls(config, EstimationConfig.from_config(config), SamplerConfig.from_config(config),
                   LinextCaps.from_config(config), out, logger)


class RunManifest(NamedTuple):
    """ Provenance of a result: how it was produced """
    command: str
    seed: int
    version: str
    config: str
    elapsed: float

    @classmethod
    def for_run(cls, argv: Sequence[str], config: PrefdistConfiguration, elapsed: float) -> "RunManifest":
        return cls(command=" ".join(shlex.quote(arg) for arg in ["prefdist", *argv]),
                   seed=config.estimation.seed,
                   version=__version__,
                   config=dump_configuration(config),
                   elapsed=elapsed)

    def header_lines(self) -> List[str]:
        """ Comment lines to head a result file; timing comes last """
        return [
            f"# command: {self.command}",
            f"# seed: {self.seed}",
            f"# version: {self.version}",
            f"# config: {self.config}",
            f"# elapsed: {self.elapsed:.3f}s"
        ]
