import logging
import os
import threading
import time
from typing import Optional

import psutil  # type: ignore

logger = logging.getLogger(__name__)

_MEMORY_CHECK_INTERVAL = 0.25
MEMORY_EXCEEDED_EXIT_CODE = 137  # same code as an OOM kill


def resident_memory_mb(pid: Optional[int] = None) -> float:
    process = psutil.Process(pid if pid is not None else os.getpid())
    return process.memory_info().rss / 1024 / 1024


def start_memory_watchdog(memory_limit_mb: int, interval: float = _MEMORY_CHECK_INTERVAL) -> Optional[threading.Thread]:
    """
    Kill the process with exit code 137 once its resident memory passes the limit.

    Long g-table runs grow their series caches without bound; this is the
    only cap on them. A limit of 0 disables the watchdog.
    """
    if memory_limit_mb <= 0:
        logger.debug("Memory limit is 0, watchdog not started.")
        return None

    def check_memory() -> None:
        while True:
            memory_mb = resident_memory_mb()
            if memory_mb > memory_limit_mb:
                logger.error(f"Memory limit exceeded! Using {memory_mb:.1f}MB > {memory_limit_mb}MB limit")
                os._exit(MEMORY_EXCEEDED_EXIT_CODE)
            time.sleep(interval)

    watchdog_thread = threading.Thread(target=check_memory, name="memory-watchdog", daemon=True)
    watchdog_thread.start()
    return watchdog_thread
