"""Scaling benchmark for the linear-time span solver."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .generators import random_tree
from .tree_span import strong_vertex_span


@dataclass(frozen=True)
class BenchRow:
    n: int
    median_seconds: float
    ratio: float | None  # median time over the previous row's median


def _warm_up() -> None:
    # first call pays for numba compilation or cache loading
    strong_vertex_span(random_tree(64, 0))


def run_bench(sizes: Sequence[int], trials: int = 5, seed: int = 0) -> list[BenchRow]:
    """Median solver wall time per size; tree generation is not timed."""
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    _warm_up()
    rng = np.random.default_rng(seed)
    rows: list[BenchRow] = []
    for n in sizes:
        times = []
        for _ in range(trials):
            tree = random_tree(n, rng)
            # same convention as timeit: no collector pauses inside the timed region
            gc.collect()
            gc.disable()
            try:
                start = time.perf_counter()
                strong_vertex_span(tree)
                times.append(time.perf_counter() - start)
            finally:
                gc.enable()
        med = statistics.median(times)
        ratio = med / rows[-1].median_seconds if rows else None
        rows.append(BenchRow(n, med, ratio))
    return rows
