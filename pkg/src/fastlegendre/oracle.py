"""Direct O(N Q) quadrature of c_n = (n + 1/2) int f P_n, the reference for the fast path."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_positive_int, default_oracle_order
from .quadrature import gauss_legendre_nodes
from .spectral import LegendreCoefficients

__all__ = ["ComparisonReport", "oracle_coefficients", "oracle_nodes", "compare"]


@dataclass(frozen=True)
class ComparisonReport:
    per_index_abs_error: np.ndarray
    max_abs_error: float
    n_at_max: int
    fast_seconds: float | None = None
    oracle_seconds: float | None = None


def oracle_nodes(spec, Q):
    """Q-point Gauss--Legendre nodes/weights on each smooth piece of [-1, 1]."""
    x, w = gauss_legendre_nodes(Q)
    cuts = [-1.0, *sorted(b for b in spec.breakpoints if -1.0 < b < 1.0), 1.0]
    xs, ws = [], []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        half = 0.5 * (hi - lo)
        xs.append(lo + half * (x + 1.0))
        ws.append(half * w)
    return np.concatenate(xs), np.concatenate(ws)


def oracle_coefficients(spec, N, Q=None):
    """c_0 .. c_{N-1} by Gauss--Legendre quadrature of order Q on [-1, 1].

    P_n is generated by the three-term recurrence at the nodes, one degree
    at a time, so the cost is O(N Q) with O(Q) memory. The integral is split
    at the breakpoints of ``spec`` (x = 0 for |x|^{3/2}).
    """
    N = check_positive_int(N, "N")
    Q = default_oracle_order(N) if Q is None else check_positive_int(Q, "Q")
    if Q < N:
        raise ValueError(f"oracle order Q = {Q} cannot resolve P_{N - 1}; need Q >= N")
    x, w = oracle_nodes(spec, Q)
    fw = w * spec(x)
    values = np.empty(N)
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    for n in range(N):
        values[n] = (n + 0.5) * np.dot(fw, p)
        p_prev, p = p, ((2 * n + 1) * x * p - n * p_prev) / (n + 1)
    params = {"method": "oracle", "N": N, "Q": Q, "spec_label": getattr(spec, "label", "")}
    return LegendreCoefficients(values, 0.0, params)


def _values(c):
    return np.asarray(c.values if isinstance(c, LegendreCoefficients) else c, dtype=float)


def compare(a, b, fast_seconds=None, oracle_seconds=None):
    """Entrywise absolute difference of two coefficient vectors of equal length."""
    va, vb = _values(a), _values(b)
    if va.shape != vb.shape:
        raise ValueError(f"length mismatch: {va.size} vs {vb.size}")
    err = np.abs(va - vb)
    n = int(np.argmax(err))
    return ComparisonReport(err, float(err[n]), n, fast_seconds, oracle_seconds)
