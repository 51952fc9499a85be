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

from typing import FrozenSet, NamedTuple, Tuple

from prefdist.casebase._exceptions import InconsistentElicitation
from prefdist.common import Relation
from prefdist.orders import CycleError, OutcomeSpace, PartialPreferenceOrder

Query = Tuple[str, str]


class ElicitationState(NamedTuple):
    """ What has been learnt of a preference structure so far """
    elicited: PartialPreferenceOrder
    asked: FrozenSet[Query]
    query_count: int

    @classmethod
    def initial(cls, space: OutcomeSpace) -> "ElicitationState":
        return cls(PartialPreferenceOrder.vacuous(space), frozenset(), 0)

    def answer(self, query: Query, relation: Relation) -> "ElicitationState":
        """
        Record an answer, closing the elicited order transitively

        @param   query     Outcome pair asked
        @param   relation  Relation of the first outcome to the second
        @return  New state; raises InconsistentElicitation on a
                 contradicting answer
        """
        if query in self.asked:
            raise InconsistentElicitation(f"{query[0]} and {query[1]} were already compared")

        try:
            elicited = self.elicited.with_relation(query[0], relation, query[1])
        except CycleError as e:
            raise InconsistentElicitation(f"Answer {query[0]} {relation.value} {query[1]} contradicts earlier "
                                          f"answers: {e}")

        return ElicitationState(elicited, self.asked | {query}, self.query_count + 1)
