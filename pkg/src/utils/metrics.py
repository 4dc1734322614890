from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

@dataclass
class Timer:
    """Wall-clock timer usable as a context manager."""
    elapsed: float = 0.0
    _start: Optional[float] = field(default=None, repr=False)

    def __enter__(self) -> Timer:
        self._start = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.elapsed = time.perf_counter() - self._start

@dataclass(frozen=True)
class TimingSummary:
    median: float
    minimum: float
    maximum: float
    repeats: int

def summarize(samples: Sequence[float]) -> TimingSummary:
    values = np.asarray(samples, dtype=np.float64)
    return TimingSummary(
        median=float(np.median(values)),
        minimum=float(values.min()),
        maximum=float(values.max()),
        repeats=int(values.size)
    )
