"""
Stage timing and resource metrics for pipeline runs
"""

import time
from contextlib import contextmanager
from typing import Dict, Iterator, Optional

try:
    import psutil
except ImportError:
    psutil = None


class PipelineMonitor:
    """Collects wall-clock durations per pipeline stage"""

    def __init__(self):
        self.timings: Dict[str, float] = {}
        self.start_time = time.perf_counter()

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = self.timings.get(name, 0.0) + (
                time.perf_counter() - started
            )

    def memory_usage_mb(self) -> Optional[float]:
        if psutil is None:
            return None
        return psutil.Process().memory_info().rss / 1024 / 1024

    def get_metrics(self) -> Dict[str, object]:
        """Timings in seconds, rounded to 3 decimals"""
        memory = self.memory_usage_mb()
        return {
            "timings": {name: round(value, 3) for name, value in self.timings.items()},
            "total": round(time.perf_counter() - self.start_time, 3),
            "memory_usage_mb": round(memory, 1) if memory is not None else None,
        }
