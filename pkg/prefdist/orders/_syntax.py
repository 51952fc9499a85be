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

# Textual order syntax, least preferred first:
#
#   WEAK_ORDER    := TIER *( "<" TIER )
#   TIER          := LABEL *( "=" LABEL )
#   PARTIAL_ORDER := [ CONSTRAINT *( ";" CONSTRAINT ) ]
#   CONSTRAINT    := WEAK_ORDER        (a chain; a single label just names it)
#
# e.g., "B < M < P", "a = b < c" and "a < c; b < c; d = e"

from typing import List, Optional, Tuple, Union

from prefdist.orders._exceptions import OrderSyntaxError
from prefdist.orders._partial import PartialPreferenceOrder, build_partial_order
from prefdist.orders._space import OutcomeSpace
from prefdist.orders._weak import WeakOrder, build_weak_order

_Chain = List[List[str]]


def _parse_chain(text: str, line: Optional[int]) -> _Chain:
    chain: _Chain = []

    for tier_text in text.split("<"):
        tier = [label.strip() for label in tier_text.split("=")]

        if any(label == "" for label in tier):
            raise OrderSyntaxError(f"Missing outcome label in \"{text.strip()}\"", line)

        chain.append(tier)

    return chain


def _appearance_order(chains: List[_Chain]) -> List[str]:
    seen: List[str] = []
    for chain in chains:
        for tier in chain:
            for label in tier:
                if label not in seen:
                    seen.append(label)

    return seen


def parse_weak_order(text: str, space: Optional[OutcomeSpace]=None, line: Optional[int]=None) -> WeakOrder:
    """
    Parse a complete order, e.g., "a = b < c"

    @param   text   Order text
    @param   space  Outcome space; inferred from the labels (in order of
                    appearance) when omitted
    @param   line   Line number, for error reporting
    @return  Weak order
    """
    if not text.strip():
        raise OrderSyntaxError("Empty order", line)

    chain = _parse_chain(text, line)

    if space is None:
        space = OutcomeSpace(_appearance_order([chain]))

    return build_weak_order(space, chain)


def parse_partial_order(text: str, space: Optional[OutcomeSpace]=None,
                        line: Optional[int]=None) -> PartialPreferenceOrder:
    """
    Parse a partial order, e.g., "a < c; b < c; d = e"; the empty string
    is the vacuous order

    @param   text   Order text
    @param   space  Outcome space; inferred from the labels (in order of
                    appearance) when omitted
    @param   line   Line number, for error reporting
    @return  Partial preference order
    """
    chains = [_parse_chain(constraint, line) for constraint in text.split(";") if constraint.strip()]

    if space is None:
        labels = _appearance_order(chains)
        if not labels:
            raise OrderSyntaxError("Cannot infer outcomes from an empty order", line)

        space = OutcomeSpace(labels)

    indifference: List[Tuple[str, str]] = []
    strict: List[Tuple[str, str]] = []

    for chain in chains:
        for tier in chain:
            indifference.extend((tier[0], label) for label in tier[1:])

        for lower, higher in zip(chain, chain[1:]):
            strict.append((lower[0], higher[0]))

    return build_partial_order(space, indifference, strict)


def format_weak_order(order: WeakOrder) -> str:
    return repr(order)


def format_partial_order(order: PartialPreferenceOrder) -> str:
    """
    Format a partial order as its generating constraints: one clause per
    non-singleton class, then one per reduction edge

    @param   order  Partial order
    @return  Order text (string)
    """
    space = order.space
    clauses = [order.class_label(klass) for klass in range(order.m) if len(order.classes[klass]) > 1]

    _, strict = order.constraints()
    clauses.extend(f"{space.label(a)} < {space.label(b)}" for a, b in strict)

    return "; ".join(clauses)


def format_order(order: Union[WeakOrder, PartialPreferenceOrder]) -> str:
    if isinstance(order, WeakOrder):
        return format_weak_order(order)

    return format_partial_order(order)
