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
import unittest
from configparser import ParsingError
from tempfile import NamedTemporaryFile

from prefdist.common import ClosenessPolicy, MetricKind
from prefdist.config import PrefdistConfiguration

ESTIMATION_CONF = [
    "[estimation]",
    "seed = 42",
    "samples = 5000",
    "confidence = 10",
    "epsilon = 0.05",
    "tau = 0.5",
    "workers = 4"
]

SAMPLER_CONF = [
    "[sampler]",
    "seed = 7",
    "step_constant = 2.5"
]

LINEXT_CONF = [
    "[linext]",
    "enumeration_cap = 8",
    "count_cap = 16"
]

ELICITATION_CONF = [
    "[elicitation]",
    "metric = footrule",
    "budget = 12",
    "policy = minimax"
]

LOGGING_CONF = [
    "[logging]",
    "output = STDERR",
    "level = warning"
]


class TestConfiguration(unittest.TestCase):
    def setUp(self):
        self.config_file = NamedTemporaryFile(mode="w+t", delete=True)

        self.config_file.write("\n".join(
            ESTIMATION_CONF +
            SAMPLER_CONF +
            LINEXT_CONF +
            ELICITATION_CONF +
            LOGGING_CONF
        ))
        self.config_file.flush()

    def tearDown(self):
        self.config_file.close()

    def test_get_config(self):
        config = PrefdistConfiguration(self.config_file.name)

        sections = [section for section in config]
        expected = ["estimation", "sampler", "linext", "elicitation", "logging"]
        self.assertEqual(sorted(sections), sorted(expected))

    def test_config(self):
        config = PrefdistConfiguration(self.config_file.name)

        self.assertEqual(config.estimation.seed, 42)
        self.assertEqual(config.estimation.samples, 5000)
        self.assertEqual(config.estimation.confidence, 10.0)
        self.assertEqual(config.estimation.epsilon, 0.05)
        self.assertEqual(config.estimation.tau, 0.5)
        self.assertEqual(config.estimation.workers, 4)
        self.assertEqual(config.estimation.pilot_samples, 1000)

        self.assertEqual(config.sampler.seed, 7)
        self.assertEqual(config.sampler.step_constant, 2.5)
        self.assertEqual(config.sampler.batch_size, 256)

        self.assertEqual(config.linext.enumeration_cap, 8)
        self.assertEqual(config.linext.count_cap, 16)

        self.assertEqual(config.elicitation.metric, MetricKind.footrule)
        self.assertEqual(config.elicitation.budget, 12)
        self.assertEqual(config.elicitation.policy, ClosenessPolicy.minimax)

        self.assertIsNone(config.logging.output)
        self.assertEqual(config.logging.level, logging.WARNING)

    def test_defaults(self):
        config = PrefdistConfiguration()

        self.assertEqual(config.estimation.seed, 0)
        self.assertIsNone(config.estimation.samples)
        self.assertIsNone(config.estimation.tau)
        self.assertEqual(config.estimation.confidence, 20.0)
        self.assertEqual(config.estimation.epsilon, 0.01)
        self.assertEqual(config.elicitation.metric, MetricKind.probabilistic)
        self.assertEqual(config.elicitation.policy, ClosenessPolicy.conservative)
        self.assertEqual(config.logging.level, logging.INFO)

    def test_missing_file_gives_defaults(self):
        config = PrefdistConfiguration("/this_file_probably_does_not_exist")
        self.assertEqual(config.estimation.max_samples, 100000)

    def test_invalid_values(self):
        for bad in ["epsilon = 1.5", "confidence = 1", "samples = 0", "seed = -1", "pilot_samples = 1"]:
            with NamedTemporaryFile(mode="w+t") as config_file:
                config_file.write("\n".join(["[estimation]", bad]))
                config_file.flush()

                self.assertRaises(ParsingError, PrefdistConfiguration, config_file.name)

    def test_unknown_metric(self):
        with NamedTemporaryFile(mode="w+t") as config_file:
            config_file.write("\n".join(["[elicitation]", "metric = kendall"]))
            config_file.flush()

            self.assertRaises(ParsingError, PrefdistConfiguration, config_file.name)

    def test_unknown_keys(self):
        for lines in [["[estimation]", "epsilom = 0.1"], ["[estimator]", "seed = 1"]]:
            with NamedTemporaryFile(mode="w+t") as config_file:
                config_file.write("\n".join(lines))
                config_file.flush()

                self.assertRaises(ParsingError, PrefdistConfiguration, config_file.name)

    def test_override(self):
        config = PrefdistConfiguration(self.config_file.name)

        config.estimation.override("seed", "99")
        self.assertEqual(config.estimation.seed, 99)
        self.assertEqual(config.as_dict()["estimation"]["seed"], "99")

        self.assertRaises(ParsingError, config.estimation.override, "epsilon", "0")


if __name__ == "__main__":
    unittest.main()
