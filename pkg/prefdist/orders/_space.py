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

import re
from numbers import Integral
from typing import Dict, Iterable, Iterator, Tuple, Union

from prefdist.common import SpaceMismatch
from prefdist.orders._exceptions import OrderError

# Characters reserved by the textual order and case base syntax
_RE_LABEL = re.compile(r"^[^\s<=;,|#:](?:[^<=;,|#:]*[^\s<=;,|#:])?$")

Outcome = Union[str, int]


class OutcomeSpace(object):
    """
    Finite set of named outcomes

    Outcomes are addressed internally by dense index (the position of
    their label); labels are only surface syntax.
    """
    __slots__ = ("_labels", "_index")

    def __init__(self, labels: Iterable[str]) -> None:
        """
        Constructor

        @param   labels  Distinct outcome names, in declaration order
        """
        labels = tuple(labels)

        if not labels:
            raise OrderError("An outcome space needs at least one outcome")

        for label in labels:
            if not isinstance(label, str) or not _RE_LABEL.match(label):
                raise OrderError(f"Invalid outcome label \"{label}\"")

        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            duplicates = sorted({label for label in labels if labels.count(label) > 1})
            raise OrderError(f"Duplicate outcome labels: {', '.join(duplicates)}")

        self._labels: Tuple[str, ...] = labels
        self._index: Dict[str, int] = index

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self._labels)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OutcomeSpace) and self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __repr__(self) -> str:
        return f"OutcomeSpace({', '.join(self._labels)})"

    def index(self, outcome: Outcome) -> int:
        """
        Resolve an outcome (label or index) to its index

        @param   outcome  Label (string) or index (int)
        @return  Index (int)
        """
        if isinstance(outcome, Integral):
            if not 0 <= outcome < len(self._labels):
                raise OrderError(f"Outcome index {outcome} out of range")

            return int(outcome)

        try:
            return self._index[outcome]

        except KeyError:
            raise OrderError(f"Unknown outcome \"{outcome}\"")

    def label(self, index: int) -> str:
        return self._labels[index]

    def check_same(self, other: "OutcomeSpace") -> None:
        """ Raise SpaceMismatch unless other is the same outcome space """
        if self != other:
            raise SpaceMismatch(f"Outcome spaces differ: {self} and {other}")
