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

import atexit
import logging
from concurrent.futures import ThreadPoolExecutor
from threading import Lock
from typing import Dict

_pools: Dict[int, ThreadPoolExecutor] = {}
_pools_lock = Lock()


def shared_pool(workers: int) -> ThreadPoolExecutor:
    """
    The process-wide thread pool of the given size, started on first use
    and shut down at exit

    Tasks run on a shared pool must not wait on other tasks of the same
    pool.

    @param   workers  Number of worker threads
    @return  Thread pool (ThreadPoolExecutor)
    """
    if workers < 1:
        raise ValueError("A pool needs at least one worker")

    with _pools_lock:
        pool = _pools.get(workers)
        if pool is None:
            logging.getLogger("prefdist").debug(f"Starting shared pool with {workers} workers")
            pool = _pools[workers] = ThreadPoolExecutor(max_workers=workers)
            atexit.register(pool.shutdown)

        return pool
