"""Micro-benchmark of bound evaluation against the reference inverse sine.

The bounds cost two square roots and a handful of arithmetic operations per
point, so their midpoint is a cheap arcsin approximation; this module times
that trade on a fixed seeded input set and reports the midpoint's worst error.
Rows are produced for every available kernel backend, so a single run also
compares the numba loops against the pure-numpy fallback.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernels import available_backends, backend_module
from .verify import oracle_arcsin_grid

#: PRNG seed for the benchmark input set; fixed so repeated runs are identical.
BENCH_SEED = 0x5AFE

_WARMUP = 1_000
_TIMED_RUNS = 5
_MIN_ITERS = 1_000


@dataclass(frozen=True)
class BenchResult:
    backend: str
    operation: str
    ns_per_op: float


def input_set(n: int) -> np.ndarray:
    """n pseudo-random abscissas in [0, 1) drawn with the documented seed."""
    return np.random.default_rng(BENCH_SEED).random(n)


def run_bench(iters: int) -> tuple[list[BenchResult], float]:
    """Time N evaluations of each operation per backend; median of 5 runs.

    Returns the timing rows plus the enclosure midpoint's maximum absolute
    error against the reference inverse sine over the input set (computed with
    the active backend, outside any timed region).  A warm-up of 1000 untimed
    iterations precedes each measurement.
    """
    if iters < _MIN_ITERS:
        raise DomainError(f"iters must be >= {_MIN_ITERS}, got {iters!r}")
    xs = input_set(iters)
    warm = xs[:_WARMUP]
    oracle = oracle_arcsin_grid(xs)  # validates the oracle before timing

    rows: list[BenchResult] = []
    for backend in available_backends():
        kern = backend_module(backend)
        operations = (
            ("bound-pair[alpha=4]", lambda: kern.bound_pair(xs, 4.0)),
            ("enclosure-midpoint[alpha=4]", lambda: kern.midpoint(xs, 4.0)),
            ("reference-arcsin", lambda: kern.inverse_sine(xs)),
        )
        warmups = (
            lambda: kern.bound_pair(warm, 4.0),
            lambda: kern.midpoint(warm, 4.0),
            lambda: kern.inverse_sine(warm),
        )
        for (name, op), warmup in zip(operations, warmups):
            warmup()
            samples = []
            for _ in range(_TIMED_RUNS):
                t0 = time.perf_counter()
                op()
                samples.append(time.perf_counter() - t0)
            rows.append(
                BenchResult(
                    backend=backend,
                    operation=name,
                    ns_per_op=statistics.median(samples) * 1e9 / iters,
                )
            )

    mid = backend_module().midpoint(xs, 4.0)
    max_abs_err = float(np.abs(mid - oracle).max())
    return rows, max_abs_err
