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
from configparser import ConfigParser, ParsingError
from typing import Callable, Dict, Optional, Type

import prefdist.common.canon as canon
from prefdist.config import _elicitation as elicitation
from prefdist.config import _estimation as estimation
from prefdist.config import _linext as linext
from prefdist.config import _log as log
from prefdist.config._tree_builder import Configuration, OptionalKey, config_factory


class _ConfigFactories(object):
    def __init__(self) -> None:
        self._factories: Dict[str, Callable[[ConfigParser], Configuration]] = {}

    def add(self, section: str, constructor: Type[Configuration], *mappings):
        self._factories[section] = lambda config: config_factory(constructor, config, section, *mappings)

    def __call__(self, section: str, config: ConfigParser) -> Configuration:
        return self._factories[section](config)

    def __contains__(self, section: str) -> bool:
        return section in self._factories

    def __iter__(self):
        return iter(self._factories)


_factories = _ConfigFactories()

_factories.add("estimation", estimation.EstimationSection,
    OptionalKey("seed",            estimation.seed,            "0"),
    OptionalKey("samples",         estimation.samples,         "auto"),
    OptionalKey("confidence",      estimation.confidence,      "20"),
    OptionalKey("epsilon",         estimation.epsilon,         "0.01"),
    OptionalKey("tau",             estimation.tau,             "plugin"),
    OptionalKey("pilot_samples",   estimation.pilot_samples,   "1000"),
    OptionalKey("tau_floor",       estimation.tau_floor,       "0.01"),
    OptionalKey("max_samples",     estimation.max_samples,     "100000"),
    OptionalKey("workers",         estimation.workers,         "1")
)

_factories.add("sampler", linext.SamplerSection,
    OptionalKey("seed",            estimation.seed,            "0"),
    OptionalKey("epsilon",         estimation.epsilon,         "0.01"),
    OptionalKey("step_constant",   linext.step_constant,       "4"),
    OptionalKey("batch_size",      linext.batch_size,          "256")
)

_factories.add("linext", linext.LinextSection,
    OptionalKey("enumeration_cap", linext.enumeration_cap,     "10"),
    OptionalKey("count_cap",       linext.count_cap,           "20"),
    OptionalKey("exact_pair_cap",  linext.exact_pair_cap,      "1000000")
)

_factories.add("elicitation", elicitation.ElicitationSection,
    OptionalKey("metric",          elicitation.metric,         "probabilistic"),
    OptionalKey("budget",          elicitation.budget,         "50"),
    OptionalKey("policy",          elicitation.policy,         "conservative")
)

_factories.add("logging", log.LoggingConfig,
    OptionalKey("output",          log.output,                 "STDERR"),
    OptionalKey("level",           log.level,                  "info")
)


class PrefdistConfiguration(Configuration):
    """ Top-level prefdist configuration """
    def __init__(self, config_file: Optional[str]=None) -> None:
        """
        Parse configuration from file; a missing file (or None) yields
        the built-in defaults

        @param   config_file  Configuration filename
        """
        super().__init__()

        config = ConfigParser()
        if config_file is not None:
            filename = canon.path(config_file)
            if os.path.exists(filename):
                with open(filename, "r") as fp:
                    config.read_file(fp)

        unknown = [section for section in config.sections() if section not in _factories]
        if unknown:
            raise ParsingError(f"Unknown section(s): {', '.join(unknown)}")

        for section in _factories:
            self.add_config(section, _factories(section, config))
