"""Scaling measurements for the conjugacy decision.

Samples random reduced word pairs at geometrically spaced lengths, runs
the memoized decision on a fresh context per pair (so visited-pair
counts are not polluted by sharing across samples), and fits log-log
slopes of tree size and wall time against the length.
"""

from __future__ import annotations

import io
import random
import time
from dataclasses import dataclass

import numpy as np

from .conjugacy import ConjContext
from .quotient import standard_lift_table, standard_quotient
from .words import random_reduced_word


@dataclass
class BenchRecord:
    n: int
    tree_size: int
    visited: int
    millis: float


def geometric_lengths(max_len: int, start: int = 16) -> list[int]:
    lengths = []
    n = start
    while n < max_len:
        lengths.append(n)
        n *= 2
    lengths.append(max_len)
    return lengths


def run_bench(max_len: int = 1024, samples: int = 3,
              seed: int = 0) -> list[BenchRecord]:
    rng = random.Random(seed)
    quotient = standard_quotient()
    lifts = standard_lift_table()
    records = []
    for n in geometric_lengths(max_len):
        for _ in range(samples):
            u = random_reduced_word(rng, n)
            v = random_reduced_word(rng, n)
            ctx = ConjContext(quotient, lifts)
            t0 = time.perf_counter()
            ctx.q_mask(u, v)
            millis = (time.perf_counter() - t0) * 1000.0
            size = ctx.tree_size(u, v)
            records.append(BenchRecord(n, size, ctx.visited_pairs, millis))
    return records


def fit_exponent(records: list[BenchRecord], attr: str) -> float:
    """Least-squares slope of log(value) against log(n)."""
    xs = np.log([r.n for r in records])
    ys = np.log([max(getattr(r, attr), 1e-3) for r in records])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    buf.write("n,tree_size,visited,millis\n")
    for r in records:
        buf.write(f"{r.n},{r.tree_size},{r.visited},{r.millis:.3f}\n")
    return buf.getvalue()
