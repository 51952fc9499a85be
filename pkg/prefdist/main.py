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
import logging
import os
import sys
from types import TracebackType
from typing import List, Optional, Type, overload

from prefdist import __version__
from prefdist.cli import ExitCode, RunContext, RunManifest, apply_flags, build_parser, exit_code, output_format, \
                         run_command
from prefdist.common import CONFIG_ENV
from prefdist.config import LoggingConfig, PrefdistConfiguration
from prefdist.logs import Stopwatch, create_logger


class _BootstrapLogging(object):
    """ Bootstrap logger """
    logger: logging.Logger
    config: LoggingConfig

    def __init__(self) -> None:
        from configparser import ConfigParser
        from prefdist.config import config

        bootstrap_config = ConfigParser()
        bootstrap_config.read_string("""
            [logging]
            output = STDERR
            level = warning
        """)

        self.config = config._factories("logging", bootstrap_config)

    def __enter__(self) -> logging.Logger:
        self.logger = create_logger(self.config)
        return self.logger

    @overload
    def __exit__(self, exc_type: Type[BaseException], exc_val: BaseException, exc_tb: TracebackType) -> bool: ...

    def __exit__(self, exc_type: None, exc_val: None, exc_tb: None) -> bool:
        if exc_type:
            # Propagate exception
            return False

        self.logger.handlers = []
        del self.logger
        return True


def _emit(body: str, manifest: Optional[RunManifest], target: Optional[str]) -> None:
    """ Write results in one go, so a failed run leaves no partial output """
    header = "".join(f"{line}\n" for line in manifest.header_lines()) if manifest else ""

    if target is None:
        sys.stdout.write(header + body)
        return

    partial = f"{target}.partial"
    with open(partial, "w", encoding="utf-8") as fp:
        fp.write(header + body)

    os.replace(partial, target)


def main(argv: Optional[List[str]]=None) -> int:
    """
    Parse the command line and configuration, then run the command

    @param   argv  Arguments, without the program name (default: sys.argv)
    @return  Exit status (int)
    """
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(argv)

    # Errors in the configuration itself are reported by the bootstrap logger
    with _BootstrapLogging() as bootstrap_logger:
        try:
            config = PrefdistConfiguration(args.config or os.environ.get(CONFIG_ENV, "~/prefdist.conf"))
            apply_flags(config, args)
        except Exception as e:
            code = exit_code(e)
            if code is None:
                raise

            bootstrap_logger.error(str(e))
            return code

    logger = create_logger(config.logging)
    logger.debug(f"prefdist {__version__}: {args.verb}")

    body = io.StringIO()
    try:
        with Stopwatch(f"prefdist {args.verb}", logger) as stopwatch:
            code = run_command(args, RunContext.from_config(config, body, logger))
    except Exception as e:
        code = exit_code(e)
        if code is None:
            raise

        logger.error(str(e))
        return code

    # Result files always carry their manifest; text for the terminal does not
    manifest = None
    if args.output is not None or output_format(args) == "csv":
        manifest = RunManifest.for_run(argv, config, stopwatch.elapsed)

    try:
        _emit(body.getvalue(), manifest, args.output)
    except OSError as e:
        logger.error(str(e))
        return ExitCode.usage

    return code


if __name__ == "__main__":
    sys.exit(main())
