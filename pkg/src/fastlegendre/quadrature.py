"""Gauss--Legendre rules on [0, 1] and [-1, 1]."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

__all__ = ["QuadratureRule", "gauss_legendre", "gauss_legendre_nodes"]

# leggauss solves a dense eigenproblem; above this order we switch to Newton.
_DENSE_MAX_ORDER = 200


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss--Legendre rule of order ``order`` normalized to [0, 1].

    ``nodes`` lie strictly inside (0, 1) and ``weights`` sum to one, so
    ``weights @ g(nodes)`` approximates the integral of ``g`` over [0, 1]
    and is exact for polynomials of degree ``2 * order - 1``.
    """

    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def on(self, a, b):
        """Nodes and weights mapped to [a, b] (broadcasts over array ``a``, ``b``)."""
        a = np.asarray(a, dtype=float)[..., None]
        b = np.asarray(b, dtype=float)[..., None]
        width = b - a
        return a + width * self.nodes, width * self.weights

    def integrate(self, func, a=0.0, b=1.0):
        x, w = self.on(a, b)
        return np.sum(w * func(x), axis=-1)


def _newton_nodes(n):
    """Positive Gauss--Legendre nodes/weights of order n on [-1, 1].

    Tricomi's asymptotic guess followed by Newton steps, with P_n and
    P_n' from the three-term recurrence vectorized over the nodes.
    Costs O(n^2) but only O(n) memory.
    """
    m = (n + 1) // 2
    k = np.arange(1, m + 1)
    theta = np.pi * (4 * k - 1) / (4 * n + 2)
    x = (1.0 - (1.0 - 1.0 / n) / (8.0 * n * n)) * np.cos(theta)

    def p_and_dp(x):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for j in range(1, n):
            p0, p1 = p1, ((2 * j + 1) * x * p1 - j * p0) / (j + 1)
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        return p1, dp

    for _ in range(20):
        p, dp = p_and_dp(x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-12:
            # Quadratic convergence: x is now exact to rounding. Move dp to the
            # new x with P'' from the Legendre ODE instead of another O(n^2) pass.
            ddp = (2.0 * (x + dx) * dp - n * (n + 1) * p) / (1.0 - (x + dx) ** 2)
            dp = dp - dx * ddp
            break
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    return x, w


@lru_cache(maxsize=32)
def gauss_legendre_nodes(n):
    """Gauss--Legendre nodes (ascending) and weights of order n on [-1, 1]."""
    n = int(n)
    if n < 1:
        raise ValueError(f"quadrature order must be positive, got {n}")
    if n <= _DENSE_MAX_ORDER:
        x, w = leggauss(n)
    else:
        xp, wp = _newton_nodes(n)
        # xp is positive and descending; for odd n its last entry is the zero node.
        tail = 1 if n % 2 else 0
        x = np.concatenate([-xp, xp[::-1][tail:]])
        w = np.concatenate([wp, wp[::-1][tail:]])
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=32)
def gauss_legendre(order):
    """Gauss--Legendre :class:`QuadratureRule` of the given order on [0, 1]."""
    x, w = gauss_legendre_nodes(order)
    nodes = 0.5 * (x + 1.0)
    weights = 0.5 * w
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(int(order), nodes, weights)
