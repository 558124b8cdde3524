"""Wall-clock comparison of the FFT pipeline against the direct quadrature oracle."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass, field

from ._validation import default_grid_size, default_oracle_order
from .oracle import compare, oracle_coefficients
from .quadrature import gauss_legendre
from .spectral import DEFAULT_QUAD_ORDER, legendre_transform

__all__ = ["BenchRow", "BenchReport", "median_time", "run_bench"]


@dataclass(frozen=True)
class BenchRow:
    N: int
    fast_seconds: float
    oracle_seconds: float
    speedup: float
    max_abs_error_vs_oracle: float


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)

    FIELDS = ("N", "fast_seconds", "oracle_seconds", "speedup", "max_abs_error_vs_oracle")


def median_time(func, repeats=5, warmup=1):
    """Median wall time of ``func()`` over ``repeats`` calls after ``warmup`` calls.

    Returns ``(median_seconds, last_result)``.
    """
    result = None
    for _ in range(warmup):
        result = func()
    times = []
    gc_was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(repeats):
            start = time.perf_counter()
            result = func()
            times.append(time.perf_counter() - start)
    finally:
        if gc_was_enabled:
            gc.enable()
    return statistics.median(times), result


def run_bench(spec, n_list, K=DEFAULT_QUAD_ORDER, repeats=5, warmup=1, M_for=None, Q_for=None):
    """Time both paths for each N in ``n_list``.

    Grid size and oracle order follow the CLI defaults unless ``M_for`` /
    ``Q_for`` (callables of N) are given. Rule construction is cached, so
    the warm-up call absorbs it and the timings cover the transforms only.
    """
    M_for = M_for or default_grid_size
    Q_for = Q_for or default_oracle_order
    rule = gauss_legendre(K)
    report = BenchReport()
    for N in n_list:
        M, Q = M_for(N), Q_for(N)
        fast_s, fast = median_time(lambda: legendre_transform(spec, N, M, rule), repeats, warmup)
        slow_s, slow = median_time(lambda: oracle_coefficients(spec, N, Q), repeats, warmup)
        err = compare(fast, slow).max_abs_error
        report.rows.append(BenchRow(N, fast_s, slow_s, slow_s / fast_s, err))
    return report
