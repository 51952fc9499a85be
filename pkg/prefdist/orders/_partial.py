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

from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from prefdist.common import Relation
from prefdist.orders._exceptions import CycleError, OrderError
from prefdist.orders._space import Outcome, OutcomeSpace
from prefdist.orders._weak import HeightProfile, WeakOrder

ClassEdge = Tuple[int, int]
OutcomePair = Tuple[int, int]


def _transitive_closure(m: int, edges: Iterable[ClassEdge]) -> np.ndarray:
    closure = np.zeros((m, m), dtype=bool)

    for lower, higher in edges:
        closure[lower, higher] = True

    # Warshall's algorithm, one pivot at a time
    for k in range(m):
        closure |= np.outer(closure[:, k], closure[k, :])

    return closure


class PartialPreferenceOrder(object):
    """
    Partially specified preference order: a poset over indifference
    classes. Classes are numbered by their smallest outcome index; strict
    edges are stored as the transitive reduction, with the closure cached
    for constant time relation queries.
    """
    __slots__ = ("_space", "_classes", "_class_of", "_closure", "_reduction")

    def __init__(self, space: OutcomeSpace, classes: Iterable[Iterable[int]], edges: Iterable[ClassEdge]=()) -> None:
        """
        Constructor

        @param   space    Outcome space
        @param   classes  Partition of outcome indices into indifference classes
        @param   edges    Strict (lower, higher) pairs of positions in classes
        """
        given = [frozenset(c) for c in classes]
        class_of = np.full(space.n, -1, dtype=int)

        for position, members in enumerate(given):
            if not members:
                raise OrderError("Indifference classes must be non-empty")

            for outcome in members:
                if not 0 <= outcome < space.n:
                    raise OrderError(f"Outcome index {outcome} out of range")

                if class_of[outcome] != -1:
                    raise OrderError(f"Outcome \"{space.label(outcome)}\" appears in more than one class")

                class_of[outcome] = position

        if np.any(class_of == -1):
            missing = [space.label(i) for i in np.flatnonzero(class_of == -1)]
            raise OrderError(f"Outcomes missing from order: {', '.join(missing)}")

        # Canonical class numbering: by smallest member
        canonical = sorted(range(len(given)), key=lambda position: min(given[position]))
        renumber = {old: new for new, old in enumerate(canonical)}

        lifted: List[ClassEdge] = []
        for lower, higher in edges:
            if lower == higher:
                labels = " = ".join(space.label(i) for i in sorted(given[lower]))
                raise CycleError(f"Strict constraint within indifference class {labels}")

            lifted.append((renumber[lower], renumber[higher]))

        m = len(given)
        closure = _transitive_closure(m, lifted)

        if np.any(np.diag(closure)):
            cyclic = [i for i in range(m) if closure[i, i]]
            labels = ", ".join(space.label(min(given[canonical[i]])) for i in cyclic)
            raise CycleError(f"Strict constraints are cyclic through {labels}")

        path_counts = closure.astype(int) @ closure.astype(int)
        reduction = closure & (path_counts == 0)

        closure.setflags(write=False)
        self._space = space
        self._classes: Tuple[FrozenSet[int], ...] = tuple(given[position] for position in canonical)
        self._class_of = np.array([renumber[position] for position in class_of], dtype=int)
        self._class_of.setflags(write=False)
        self._closure = closure
        self._reduction: FrozenSet[ClassEdge] = frozenset(zip(*(axis.tolist() for axis in np.nonzero(reduction))))

    @classmethod
    def from_weak_order(cls, order: WeakOrder) -> "PartialPreferenceOrder":
        """ Lift a complete order into a (complete) partial order """
        tiers = order.tiers
        return cls(order.space, tiers, ((i, i + 1) for i in range(len(tiers) - 1)))

    @classmethod
    def vacuous(cls, space: OutcomeSpace) -> "PartialPreferenceOrder":
        """ The order with no constraints at all (an antichain) """
        return cls(space, ([i] for i in range(space.n)))

    @property
    def space(self) -> OutcomeSpace:
        return self._space

    @property
    def classes(self) -> Tuple[FrozenSet[int], ...]:
        return self._classes

    @property
    def m(self) -> int:
        """ Number of indifference classes """
        return len(self._classes)

    @property
    def class_of(self) -> np.ndarray:
        """ Class number of every outcome (read only) """
        return self._class_of

    @property
    def closure(self) -> np.ndarray:
        """ closure[i, j] iff class i is strictly below class j (read only) """
        return self._closure

    @property
    def strict_edges(self) -> FrozenSet[ClassEdge]:
        """ Transitive reduction of the strict relation over classes """
        return self._reduction

    @property
    def is_complete(self) -> bool:
        """ Whether every pair of classes is comparable """
        comparable = self._closure | self._closure.T
        return bool(np.all(comparable | np.eye(self.m, dtype=bool)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PartialPreferenceOrder) \
           and self._space == other._space \
           and self._classes == other._classes \
           and np.array_equal(self._closure, other._closure)

    def __hash__(self) -> int:
        return hash((self._space, self._classes, self._reduction))

    def __repr__(self) -> str:
        from prefdist.orders._syntax import format_partial_order
        return f"PartialPreferenceOrder({format_partial_order(self)})"

    def class_label(self, klass: int) -> str:
        """ Textual form of a class, e.g., "b = c" """
        return " = ".join(self._space.label(i) for i in sorted(self._classes[klass]))

    def relation(self, a: Outcome, b: Outcome) -> Relation:
        """
        Relation between two outcomes

        @param   a  Outcome
        @param   b  Outcome
        @return  Relation of a to b
        """
        class_a = self._class_of[self._space.index(a)]
        class_b = self._class_of[self._space.index(b)]

        if class_a == class_b:
            return Relation.indifferent

        if self._closure[class_a, class_b]:
            return Relation.precedes

        if self._closure[class_b, class_a]:
            return Relation.succeeds

        return Relation.incomparable

    def outcome_closure(self) -> np.ndarray:
        """ below[a, b] iff outcome a is strictly below outcome b """
        return self._closure[np.ix_(self._class_of, self._class_of)]

    def constraints(self) -> Tuple[List[OutcomePair], List[OutcomePair]]:
        """
        Generating constraints over outcome indices: indifference pairs
        chaining each class together, and one strict pair per reduction
        edge (between class representatives)

        @return  Tuple of indifference pairs and strict pairs
        """
        representative = [min(members) for members in self._classes]

        indifference = [
            (representative[klass], outcome)
            for klass, members in enumerate(self._classes)
            for outcome in sorted(members)
            if outcome != representative[klass]
        ]

        strict = [(representative[lower], representative[higher]) for lower, higher in sorted(self._reduction)]

        return indifference, strict

    def with_relation(self, a: Outcome, relation: Relation, b: Outcome) -> "PartialPreferenceOrder":
        """
        The order extended with one more relation, closed transitively

        @param   a         Outcome
        @param   relation  Relation of a to b (not incomparable)
        @param   b         Outcome
        @return  Extended order; raises CycleError if inconsistent
        """
        a, b = self._space.index(a), self._space.index(b)
        indifference, strict = self.constraints()

        if relation == Relation.precedes:
            strict.append((a, b))

        elif relation == Relation.succeeds:
            strict.append((b, a))

        elif relation == Relation.indifferent:
            indifference.append((a, b))

        return _from_index_pairs(self._space, indifference, strict)


class LinearExtension(object):
    """
    Complete order of a poset's indifference classes that respects every
    strict edge; classes keep their internal ties
    """
    __slots__ = ("_poset", "_order")

    def __init__(self, poset: PartialPreferenceOrder, order: Sequence[int]) -> None:
        """
        Constructor

        @param   poset  Partial order
        @param   order  Permutation of class numbers, least preferred first
        """
        order = tuple(int(klass) for klass in order)

        if sorted(order) != list(range(poset.m)):
            raise OrderError("A linear extension must contain every class exactly once")

        position = np.empty(poset.m, dtype=int)
        position[list(order)] = np.arange(poset.m)

        if np.any(poset.closure & (position[:, None] > position[None, :])):
            raise OrderError("Linear extension violates a strict constraint")

        self._poset = poset
        self._order = order

    @property
    def poset(self) -> PartialPreferenceOrder:
        return self._poset

    @property
    def order(self) -> Tuple[int, ...]:
        return self._order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearExtension) \
           and self._order == other._order \
           and self._poset == other._poset

    def __hash__(self) -> int:
        return hash(self._order)

    def __repr__(self) -> str:
        return " < ".join(self._poset.class_label(klass) for klass in self._order)

    def as_weak_order(self) -> WeakOrder:
        """ The complete order over outcomes this extension describes """
        return WeakOrder(self._poset.space, (self._poset.classes[klass] for klass in self._order))

    def heights(self) -> HeightProfile:
        return self.as_weak_order().heights()


def _union_find(n: int, pairs: Iterable[OutcomePair]) -> List[List[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        root_a, root_b = find(a), find(b)
        if root_a != root_b:
            parent[max(root_a, root_b)] = min(root_a, root_b)

    groups: dict = {}
    for outcome in range(n):
        groups.setdefault(find(outcome), []).append(outcome)

    return list(groups.values())


def _from_index_pairs(space: OutcomeSpace, indifference: Iterable[OutcomePair],
                      strict: Iterable[OutcomePair]) -> PartialPreferenceOrder:
    classes = _union_find(space.n, indifference)

    position = {}
    for klass, members in enumerate(classes):
        for outcome in members:
            position[outcome] = klass

    for a, b in strict:
        if position[a] == position[b]:
            raise CycleError(f"Strict constraint {space.label(a)} < {space.label(b)} "
                             f"contradicts indifference")

    return PartialPreferenceOrder(space, classes, ((position[a], position[b]) for a, b in strict))


def build_partial_order(space: OutcomeSpace, indifference: Iterable[Tuple[Outcome, Outcome]]=(),
                        strict: Iterable[Tuple[Outcome, Outcome]]=()) -> PartialPreferenceOrder:
    """
    Build a partial preference order from constraints: indifference
    pairs are merged (transitively) into classes, then strict pairs are
    lifted to classes and closed transitively

    @param   space         Outcome space
    @param   indifference  Pairs (a, b) meaning a ~ b
    @param   strict        Pairs (a, b) meaning a < b
    @return  Partial preference order; raises CycleError if inconsistent
    """
    indifference = [(space.index(a), space.index(b)) for a, b in indifference]
    strict = [(space.index(a), space.index(b)) for a, b in strict]
    return _from_index_pairs(space, indifference, strict)


def as_partial(order: WeakOrder) -> PartialPreferenceOrder:
    return PartialPreferenceOrder.from_weak_order(order)
