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

import io
import re
from typing import IO, Dict, List, Optional, Union

import prefdist.common.canon as canon
from prefdist.casebase._casebase import Case, CaseBase
from prefdist.casebase._exceptions import CaseBaseError
from prefdist.metrics import UtilityVector
from prefdist.orders import OrderError, OrderSyntaxError, OutcomeSpace, WeakOrder, format_order, parse_weak_order

# Case base file format (UTF-8):
#
#   outcomes: a, b, c
#   # comment
#   name | order | a < b = c
#   name | utility | 0, 1.5, 2
#   name | utility | u(a)=0, u(b)=1.5, u(c)=2
#
# Blank lines and lines starting with "#" are ignored.

_RE_OUTCOMES = re.compile(r"^\s*outcomes\s*:(?P<labels>.*)$")

_RE_UTILITY_TERM = re.compile(r"""
    ^\s*
    u \( \s* (?P<label> [^()]+? ) \s* \)    # Outcome
    \s* = \s*
    (?P<value> \S+ )                        # Utility
    \s*$
""", re.VERBOSE)

Source = Union[bytes, str, IO[bytes], IO[str]]


def _read_text(source: Source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")

    if isinstance(source, str):
        return source

    content = source.read()
    return content.decode("utf-8") if isinstance(content, bytes) else content


def parse_utility(text: str, space: OutcomeSpace, line: Optional[int]=None) -> UtilityVector:
    """
    Parse a utility vector, positional ("0, 1.5, 2", in declaration
    order) or keyed ("u(a)=0, u(b)=1.5, u(c)=2")

    @param   text   Utility text
    @param   space  Outcome space
    @param   line   Line number, for error reporting
    @return  Utility vector
    """
    terms = [term.strip() for term in text.split(",")]
    keyed = [_RE_UTILITY_TERM.match(term) for term in terms]

    try:
        if all(keyed):
            values: Dict[str, float] = {}
            for match in keyed:
                label = match["label"]
                if label in values:
                    raise OrderSyntaxError(f"Utility of \"{label}\" given twice", line)

                values[label] = canon.real(match["value"])

            return UtilityVector.from_mapping(space, values)

        if any(keyed):
            raise OrderSyntaxError("Cannot mix keyed and positional utilities", line)

        return UtilityVector(space, (canon.real(term) for term in terms))

    except (ValueError, OrderError) as e:
        if isinstance(e, OrderSyntaxError):
            raise

        raise OrderSyntaxError(str(e), line)


def load_casebase(source: Source) -> CaseBase:
    """
    Parse a case base

    @param   source  Case base file content (bytes, string or stream)
    @return  Case base; raises OrderSyntaxError (with a line number) on
             malformed input, CaseBaseError on duplicate cases
    """
    cb: Optional[CaseBase] = None

    for number, raw in enumerate(_read_text(source).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        if cb is None:
            match = _RE_OUTCOMES.match(line)
            if not match:
                raise OrderSyntaxError("Expected the \"outcomes:\" declaration", number)

            try:
                cb = CaseBase(OutcomeSpace(label.strip() for label in match["labels"].split(",")))
            except OrderError as e:
                raise OrderSyntaxError(str(e), number)

            continue

        fields = [field.strip() for field in line.split("|")]
        if len(fields) != 3:
            raise OrderSyntaxError("Expected \"name | kind | structure\"", number)

        name, kind, structure = fields
        case: Case

        if kind == "order":
            try:
                case = parse_weak_order(structure, cb.space, number)
            except OrderSyntaxError:
                raise
            except OrderError as e:
                raise OrderSyntaxError(str(e), number)

        elif kind == "utility":
            case = parse_utility(structure, cb.space, number)

        else:
            raise OrderSyntaxError(f"Unknown case kind \"{kind}\"", number)

        try:
            cb.add(name, case)
        except CaseBaseError as e:
            raise CaseBaseError(f"Line {number}: {e}")

    if cb is None:
        raise OrderSyntaxError("Missing the \"outcomes:\" declaration")

    return cb


def format_case(name: str, case: Case) -> str:
    if isinstance(case, UtilityVector):
        return f"{name} | utility | {', '.join(repr(float(value)) for value in case.values)}"

    return f"{name} | order | {format_order(case)}"


def save_casebase(cb: CaseBase) -> bytes:
    """
    Serialise a case base; loading the result gives an equal case base

    @param   cb  Case base
    @return  File content (bytes, UTF-8)
    """
    lines: List[str] = [f"outcomes: {', '.join(cb.space.labels)}"]
    lines.extend(format_case(name, case) for name, case in cb)
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_casebase(path: str) -> CaseBase:
    with open(canon.path(path), "rb") as fp:
        return load_casebase(fp)


def write_casebase(cb: CaseBase, path: str) -> None:
    with io.open(canon.path(path), "wb") as fp:
        fp.write(save_casebase(cb))
