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
from datetime import datetime, timezone
from typing import Callable, List

Listener = Callable[..., None]


def _broadcast_time() -> datetime:
    """
    Broadcast time

    @return  Current UTC time (timezone-aware datetime)
    """
    return datetime.now(timezone.utc)


class Listenable(object):
    """
    Mixin for components that report progress, such as estimators and
    elicitation sessions; listeners receive the broadcast time followed
    by the broadcast arguments, in the order they were added
    """
    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.listeners: List[Listener] = []

    def add_listener(self, listener: Listener) -> None:
        """
        Add a listener for broadcast messages; adding one twice has no
        further effect

        @param   listener  Listener (function taking timestamp, *args and **kwargs)
        """
        if listener not in self.listeners:
            self.listeners.append(listener)

    def remove_listener(self, listener: Listener) -> None:
        """
        Stop broadcasting to a listener, if it was listening

        @param   listener  Listener
        """
        if listener in self.listeners:
            self.listeners.remove(listener)

    def broadcast(self, *args, **kwargs) -> None:
        """ Broadcast a message to all the listeners """
        timestamp = _broadcast_time()

        # A listener may remove itself while being called
        for listener in list(self.listeners):
            try:
                listener(timestamp, *args, **kwargs)
            except Exception:
                logging.getLogger("prefdist").exception(f"Listener failed on {type(self).__name__} broadcast")
