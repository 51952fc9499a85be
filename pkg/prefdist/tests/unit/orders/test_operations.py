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

import itertools
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from prefdist.common import Relation, SpaceMismatch
from prefdist.linext import count_extensions
from prefdist.orders import OrderError, OutcomeSpace, PartialPreferenceOrder, WeakOrder, build_partial_order, \
                            is_extension, parse_partial_order, parse_weak_order, relation_of, restrict, top_k

SPACE = OutcomeSpace(["a", "b", "c", "d"])


@st.composite
def partial_orders(draw, max_size: int=6) -> PartialPreferenceOrder:
    """
    Arbitrary partial orders: outcomes get hidden levels, and each pair
    is constrained (tied at equal levels, ordered by level otherwise) or
    left free
    """
    n = draw(st.integers(min_value=1, max_value=max_size))
    levels = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n))
    pairs = list(itertools.combinations(range(n), 2))
    kept = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))

    indifference, strict = [], []
    for (a, b), keep in zip(pairs, kept):
        if not keep:
            continue

        if levels[a] == levels[b]:
            indifference.append((a, b))
        else:
            strict.append((a, b) if levels[a] < levels[b] else (b, a))

    return build_partial_order(OutcomeSpace(f"o{i}" for i in range(n)), indifference, strict)


def _consistent(complete: WeakOrder, partial: PartialPreferenceOrder) -> bool:
    """ Pair by pair: every relation the partial order fixes holds in the complete order """
    labels = partial.space.labels
    for a, b in itertools.permutations(labels, 2):
        fixed = relation_of(partial, a, b)
        if fixed != Relation.incomparable and relation_of(complete, a, b) != fixed:
            return False

    return True


class TestIsExtension(unittest.TestCase):
    def test_extension(self):
        partial = parse_partial_order("a < c; b < c", SPACE)

        self.assertTrue(is_extension(parse_weak_order("a < b < d < c", SPACE), partial))
        self.assertTrue(is_extension(parse_weak_order("b = a < c = d", SPACE), partial))
        self.assertFalse(is_extension(parse_weak_order("c < a < b < d", SPACE), partial))

    def test_indifference_must_hold(self):
        partial = parse_partial_order("a = b", SPACE)

        self.assertTrue(is_extension(parse_weak_order("c < a = b < d", SPACE), partial))
        self.assertFalse(is_extension(parse_weak_order("a < b < c < d", SPACE), partial))

    def test_space_mismatch(self):
        self.assertRaises(SpaceMismatch, is_extension, parse_weak_order("a < b"), parse_partial_order("a < c; b"))


class TestTopK(unittest.TestCase):
    def test_complete(self):
        order = parse_weak_order("a < b < c < d", SPACE)

        self.assertEqual(top_k(order, 1), frozenset({"d"}))
        self.assertEqual(top_k(order, 2), frozenset({"c", "d"}))
        self.assertEqual(top_k(order, 9), frozenset(SPACE.labels))
        self.assertRaises(ValueError, top_k, order, 0)

    def test_ties_admitted_whole(self):
        self.assertEqual(top_k(parse_weak_order("a < b < c = d", SPACE), 1), frozenset({"c", "d"}))

    def test_partial(self):
        order = parse_partial_order("a < c; b < c", SPACE)

        self.assertEqual(top_k(order, 1), frozenset({"c", "d"}))
        self.assertEqual(top_k(order, 3), frozenset(SPACE.labels))


class TestRestrict(unittest.TestCase):
    def test_weak(self):
        restricted = restrict(parse_weak_order("a < b = c < d", SPACE), ["d", "b", "a"])

        self.assertEqual(restricted.space.labels, ("a", "b", "d"))
        self.assertEqual(repr(restricted), "a < b < d")

    def test_partial(self):
        restricted = restrict(parse_partial_order("a < b; b < c", SPACE), ["a", "c"])

        self.assertEqual(restricted.space.labels, ("a", "c"))
        self.assertEqual(relation_of(restricted, "a", "c"), Relation.precedes)

    def test_empty(self):
        self.assertRaises(OrderError, restrict, parse_weak_order("a < b"), [])



class TestOrderProperties(unittest.TestCase):
    @settings(max_examples=25, deadline=None)
    @given(partial_orders())
    def test_extension_against_pairwise_check(self, partial):
        space = partial.space

        accepted = 0
        for permutation in itertools.permutations(range(space.n)):
            complete = WeakOrder(space, ([i] for i in permutation))
            verdict = is_extension(complete, partial)

            self.assertEqual(verdict, _consistent(complete, partial))
            accepted += verdict

        if partial.m == space.n:
            self.assertEqual(accepted, count_extensions(partial))

        if space.n <= 4:
            for levels in itertools.product(range(space.n), repeat=space.n):
                complete = WeakOrder.from_levels(space, levels)
                self.assertEqual(is_extension(complete, partial), _consistent(complete, partial))

    @settings(max_examples=100, deadline=None)
    @given(partial_orders(), st.data())
    def test_restrict_keeps_relations(self, partial, data):
        labels = partial.space.labels
        subset = data.draw(st.lists(st.sampled_from(labels), min_size=1, unique=True))
        restricted = restrict(partial, subset)

        self.assertEqual(sorted(restricted.space.labels), sorted(subset))
        for a, b in itertools.permutations(subset, 2):
            self.assertEqual(relation_of(restricted, a, b), relation_of(partial, a, b))

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=6), st.data())
    def test_restrict_weak_keeps_relations(self, levels, data):
        order = WeakOrder.from_levels(OutcomeSpace(f"o{i}" for i in range(len(levels))), levels)
        subset = data.draw(st.lists(st.sampled_from(order.space.labels), min_size=1, unique=True))
        restricted = restrict(order, subset)

        for a, b in itertools.permutations(subset, 2):
            self.assertEqual(relation_of(restricted, a, b), relation_of(order, a, b))


if __name__ == "__main__":
    unittest.main()
