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
import unittest
from tempfile import TemporaryDirectory

from prefdist.casebase import CaseBase, CaseBaseError, case_order, load_casebase, parse_utility, read_casebase, \
                              save_casebase, write_casebase
from prefdist.common import SpaceMismatch
from prefdist.metrics import UtilityVector
from prefdist.orders import OrderSyntaxError, OutcomeSpace, parse_weak_order

CASEBASE = """
# Holiday preferences
outcomes: B, M, P

Quinn   | order   | B < M < P
Robin   | order   | M < P < B
Sasha   | order   | P < M < B
Walter  | utility | 0, 1.5, 2
Ursula  | utility | u(P)=1, u(B)=0, u(M)=0
"""


class TestCaseBase(unittest.TestCase):
    def setUp(self):
        self.space = OutcomeSpace(["B", "M", "P"])

    def test_add(self):
        cb = CaseBase(self.space)
        cb.add("Quinn", parse_weak_order("B < M < P", self.space))

        self.assertEqual(len(cb), 1)
        self.assertIn("Quinn", cb)
        self.assertEqual(cb.names(), ["Quinn"])
        self.assertEqual(repr(cb.order("Quinn")), "B < M < P")

    def test_invalid_cases(self):
        cb = CaseBase(self.space)
        cb.add("Quinn", parse_weak_order("B < M < P", self.space))

        self.assertRaises(CaseBaseError, cb.add, "Quinn", parse_weak_order("P < M < B", self.space))
        self.assertRaises(CaseBaseError, cb.add, "bad | name", parse_weak_order("P < M < B", self.space))
        self.assertRaises(CaseBaseError, cb.add, "Robin", "M < P < B")
        self.assertRaises(SpaceMismatch, cb.add, "Robin", parse_weak_order("M < P < B"))

    def test_lookup(self):
        cb = CaseBase(self.space)
        order = parse_weak_order("B < M < P", self.space)
        cb.add("Quinn", order)

        self.assertRaises(CaseBaseError, cb.__getitem__, "Nobody")
        self.assertEqual(cb.remove("Quinn"), order)
        self.assertEqual(len(cb), 0)

    def test_utility_cases_rank_by_utility(self):
        utility = UtilityVector(self.space, [2, 0, 2])
        self.assertEqual(case_order(utility), parse_weak_order("M < B = P", self.space))


class TestCaseBaseFormat(unittest.TestCase):
    def test_load(self):
        cb = load_casebase(CASEBASE)

        self.assertEqual(cb.space.labels, ("B", "M", "P"))
        self.assertEqual(cb.names(), ["Quinn", "Robin", "Sasha", "Walter", "Ursula"])
        self.assertEqual(repr(cb.order("Robin")), "M < P < B")
        self.assertEqual(cb["Walter"], UtilityVector(cb.space, [0, 1.5, 2]))
        self.assertEqual(cb["Ursula"], UtilityVector(cb.space, [0, 0, 1]))
        self.assertEqual(repr(cb.order("Ursula")), "B = M < P")

    def test_load_sources(self):
        self.assertEqual(load_casebase(CASEBASE.encode("utf-8")), load_casebase(CASEBASE))

    def test_round_trip(self):
        cb = load_casebase(CASEBASE)
        self.assertEqual(load_casebase(save_casebase(cb)), cb)

    def test_files(self):
        cb = load_casebase(CASEBASE)

        with TemporaryDirectory() as directory:
            path = os.path.join(directory, "cases.txt")
            write_casebase(cb, path)
            self.assertEqual(read_casebase(path), cb)

    def test_malformed(self):
        cases = {
            "B < M < P":                                    1,
            "outcomes: B, M\nX | order | B < Q":            2,
            "outcomes: B, M\nX | order | B < M < B":        2,
            "outcomes: B, M\n\nX | ranking | B < M":        3,
            "outcomes: B, M\nX | order":                    2,
            "outcomes: B, M\nX | utility | 1, 2, 3":        2,
            "outcomes: B, M\nX | utility | u(B)=1, 2":      2,
            "outcomes: B, B":                               1
        }

        for text, line in cases.items():
            with self.assertRaises(OrderSyntaxError) as context:
                load_casebase(text)

            self.assertEqual(context.exception.line, line, text)

        self.assertRaises(OrderSyntaxError, load_casebase, "# nothing here\n")

    def test_duplicate_case(self):
        text = "outcomes: B, M\nX | order | B < M\nX | order | M < B"
        self.assertRaises(CaseBaseError, load_casebase, text)

    def test_parse_utility(self):
        space = OutcomeSpace(["a", "b"])

        self.assertEqual(parse_utility("u(b)=2, u(a)=-1", space), UtilityVector(space, [-1, 2]))
        self.assertRaises(OrderSyntaxError, parse_utility, "u(a)=1, u(a)=2", space)
        self.assertRaises(OrderSyntaxError, parse_utility, "1, x", space)


if __name__ == "__main__":
    unittest.main()
