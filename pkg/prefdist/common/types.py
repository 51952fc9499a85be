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

from abc import ABCMeta, abstractmethod
from enum import Enum, IntEnum
from numbers import Number
from typing import NamedTuple

AsyncTaskStatus = IntEnum("AsyncTaskStatus", "queued started finished failed")


class Relation(Enum):
    """ The four mutually exclusive relations between two outcomes """
    precedes = "<"
    succeeds = ">"
    indifferent = "="
    incomparable = "||"

    @property
    def converse(self) -> "Relation":
        """ The relation that holds with the arguments swapped """
        return {
            Relation.precedes:     Relation.succeeds,
            Relation.succeeds:     Relation.precedes,
            Relation.indifferent:  Relation.indifferent,
            Relation.incomparable: Relation.incomparable
        }[self]


class MetricKind(Enum):
    """ Base distance measures on complete orders """
    footrule = "footrule"
    euclidean = "euclidean"
    probabilistic = "probabilistic"


class EstimationMethod(Enum):
    exact = "exact"
    monte_carlo = "monte_carlo"


class ClosenessPolicy(Enum):
    """ Ways of comparing interval-valued distances """
    conservative = "conservative"
    minimin = "minimin"
    minimax = "minimax"


class Closeness(Enum):
    closer_b = "closer_b"
    closer_c = "closer_c"
    undecided = "undecided"


class SummaryStat(NamedTuple):
    """ Tuple of arithmetic mean and sample variance """
    mean: Number
    variance: Number


class WorkerPool(metaclass=ABCMeta):
    """ Interface for worker pools """

    @property
    @abstractmethod
    def workers(self) -> int:
        """ Number of workers in the pool """


class EvaluationMode(Enum):
    """ How an exact-or-estimated quantity is computed """
    auto = "auto"
    exact = "exact"
    sampled = "sampled"
