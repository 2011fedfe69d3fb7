"""Scaling benchmark: iteration counts and wall time across sizes.

Timing covers only the solver call; generation and validation happen
outside the timed region, so the iteration counts are noise-free evidence
for the linear bound and the wall-time slope is a secondary check.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass
from typing import List, Sequence

from .generators import generate_polygon
from .maximizer import largest_inscribed_triangle

CSV_HEADER = ("n", "trials", "generator", "mean_iterations",
              "mean_wall_time_s")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    trials: int
    generator: str
    mean_iterations: float
    mean_wall_time_s: float


def run_bench(sizes: Sequence[int], trials: int, generator: str = "regular",
              seed: int = 0) -> List[BenchRecord]:
    """Run ``trials`` solves per size and aggregate."""
    records = []
    for n in sizes:
        if n < 3:
            raise ValueError(f"size {n} below 3")
        total_iters = 0
        total_time = 0.0
        for t in range(trials):
            P = generate_polygon(generator, n, seed + t)
            t0 = time.perf_counter()
            res = largest_inscribed_triangle(P)
            total_time += time.perf_counter() - t0
            total_iters += res.iterations
        if trials > 0:
            records.append(BenchRecord(n, trials, generator,
                                       total_iters / trials,
                                       total_time / trials))
        else:
            records.append(BenchRecord(n, 0, generator, 0.0, 0.0))
    return records


def loglog_slope(records: Sequence[BenchRecord]) -> float:
    """Least-squares slope of log(mean wall time) against log(n)."""
    pts = [(math.log(r.n), math.log(r.mean_wall_time_s))
           for r in records if r.mean_wall_time_s > 0.0]
    if len(pts) < 2:
        return float("nan")
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    sxy = sum((x - mx) * (y - my) for x, y in pts)
    return sxy / sxx


def write_csv(path: str, records: Sequence[BenchRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in records:
            if r.trials > 0:
                writer.writerow([r.n, r.trials, r.generator,
                                 "%.6g" % r.mean_iterations,
                                 "%.6g" % r.mean_wall_time_s])
