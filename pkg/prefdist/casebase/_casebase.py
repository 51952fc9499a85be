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
import re
from collections import OrderedDict
from typing import Iterator, List, Optional, Tuple, Union

from prefdist.casebase._exceptions import CaseBaseError
from prefdist.logs import LogWriter
from prefdist.metrics import UtilityVector, induced_weak_order
from prefdist.orders import OutcomeSpace, WeakOrder

Case = Union[WeakOrder, UtilityVector]

_RE_CASE_NAME = re.compile(r"^[^\s|#](?:[^|]*[^\s|])?$")


def case_order(case: Case) -> WeakOrder:
    """ The complete order a stored case ranks outcomes by """
    if isinstance(case, UtilityVector):
        return induced_weak_order(case)

    return case


class CaseBase(LogWriter):
    """ Named complete preference structures over one outcome space """
    def __init__(self, space: OutcomeSpace, logger: Optional[logging.Logger]=None) -> None:
        super().__init__(logger=logger)
        self._space = space
        self._cases: "OrderedDict[str, Case]" = OrderedDict()

    @property
    def space(self) -> OutcomeSpace:
        return self._space

    def __len__(self) -> int:
        return len(self._cases)

    def __iter__(self) -> Iterator[Tuple[str, Case]]:
        return iter(self._cases.items())

    def __contains__(self, name: str) -> bool:
        return name in self._cases

    def __getitem__(self, name: str) -> Case:
        try:
            return self._cases[name]
        except KeyError:
            raise CaseBaseError(f"No such case \"{name}\"")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CaseBase) \
           and self._space == other._space \
           and list(self._cases.items()) == list(other._cases.items())

    def names(self) -> List[str]:
        """ Case names in insertion order """
        return list(self._cases)

    def order(self, name: str) -> WeakOrder:
        return case_order(self[name])

    def add(self, name: str, case: Case) -> None:
        """
        Store a case

        @param   name  Unique case name
        @param   case  Weak order or utility vector over the base's space
        """
        if not _RE_CASE_NAME.match(name):
            raise CaseBaseError(f"Invalid case name \"{name}\"")

        if name in self._cases:
            raise CaseBaseError(f"Duplicate case \"{name}\"")

        if not isinstance(case, (WeakOrder, UtilityVector)):
            raise CaseBaseError("Cases are weak orders or utility vectors")

        self._space.check_same(case.space)
        self._cases[name] = case
        self.log(logging.DEBUG, f"Added case {name}")

    def remove(self, name: str) -> Case:
        case = self[name]
        del self._cases[name]
        self.log(logging.DEBUG, f"Removed case {name}")
        return case
