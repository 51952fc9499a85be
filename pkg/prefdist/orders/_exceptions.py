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

from typing import Optional

from prefdist.common import PrefdistError


class OrderError(PrefdistError):
    """ Raised when an order cannot be constructed as given """


class CycleError(OrderError):
    """ Raised when strict constraints are inconsistent (i.e., cyclic) """


class OrderSyntaxError(OrderError):
    """ Raised when order text cannot be parsed """
    def __init__(self, message: str, line: Optional[int]=None) -> None:
        self.line = line
        super().__init__(f"Line {line}: {message}" if line is not None else message)
