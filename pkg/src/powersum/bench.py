"""Wall-clock timings for table construction and the two verification sweeps."""
from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from typing import Dict, List

from .factorization import asymptotic_check, verify_factorization_range
from .faulhaber import FaulhaberTable, bernoulli_numbers, faulhaber_poly_bernoulli, iter_build


@dataclass
class BenchReport:
    n_hi: int
    repetitions: int
    phases: Dict[str, float]
    # median cumulative build time after finishing order N, for N = 0..n_hi
    cumulative_build: List[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "max": self.n_hi,
            "repetitions": self.repetitions,
            "median_seconds": {k: round(v, 6) for k, v in self.phases.items()},
            "cumulative_build_seconds": [round(t, 6) for t in self.cumulative_build],
        }

    def summary(self) -> str:
        lines = [f"bench: N = 0..{self.n_hi}, median of {self.repetitions} run(s)"]
        for name, secs in self.phases.items():
            lines.append(f"  {name:<18} {secs * 1e3:10.3f} ms")
        return "\n".join(lines)


def _timed_build(n_hi: int):
    cumulative = []
    entries = []
    start = time.perf_counter()
    for entry in iter_build(n_hi):
        entries.append(entry)
        cumulative.append(time.perf_counter() - start)
    return FaulhaberTable(n_hi, tuple(entries)), cumulative


def run_bench(n_hi: int, repetitions: int = 3) -> BenchReport:
    if n_hi < 0:
        raise ValueError("max order must be nonnegative")
    if repetitions < 1:
        raise ValueError("repetitions must be positive")
    samples: Dict[str, List[float]] = {"table_build": [], "verification": [], "bernoulli_sweep": []}
    curves = []
    for _ in range(repetitions):
        table, cumulative = _timed_build(n_hi)
        samples["table_build"].append(cumulative[-1])
        curves.append(cumulative)

        start = time.perf_counter()
        if n_hi >= 2:
            verify_factorization_range(table, 2, n_hi)
        for order in range(1, n_hi + 1):
            asymptotic_check(table, order)
        samples["verification"].append(time.perf_counter() - start)

        start = time.perf_counter()
        cache = bernoulli_numbers(n_hi)
        for order in range(n_hi + 1):
            faulhaber_poly_bernoulli(order, cache)
        samples["bernoulli_sweep"].append(time.perf_counter() - start)

    phases = {k: statistics.median(v) for k, v in samples.items()}
    # elementwise medians of nondecreasing curves stay nondecreasing
    cumulative = [statistics.median(c[i] for c in curves) for i in range(n_hi + 1)]
    return BenchReport(n_hi, repetitions, phases, cumulative)
