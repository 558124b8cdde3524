"""Legendre coefficients as Fourier coefficients of the Abel-type transform.

With a_n = c_n / (2n + 1),

    a_n = int_{-pi}^{pi} hfhat(y) exp(iny) dy,   n >= 0,

and the rectangle rule on the uniform grid y_k = -pi + 2 pi k / M turns this
into one length-M DFT with a positive exponent:

    a_n ~ (2 pi / M) (-1)^n sum_k s_k exp(2 pi i n k / M).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._validation import check_positive_int, default_grid_size, is_power_of_two
from .abel import phi_values, sample_grid
from .quadrature import gauss_legendre

__all__ = [
    "AliasingError",
    "LegendreCoefficients",
    "dft_forward",
    "coefficients_from_grid",
    "legendre_transform",
    "sine_form_transform",
    "DEFAULT_QUAD_ORDER",
]

DEFAULT_QUAD_ORDER = 64


class AliasingError(ValueError):
    """Requested more coefficients than the grid resolves (N > M/2)."""


@dataclass(frozen=True, eq=False)
class LegendreCoefficients:
    """Coefficients c_0 .. c_{N-1} and the parameters that produced them.

    ``imag_residual`` is the largest imaginary part discarded when taking
    c_n = (2n + 1) Re(a_n); it is zero for the real-arithmetic paths.
    """

    values: np.ndarray
    imag_residual: float = 0.0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def N(self):
        return self.values.size

    def __len__(self):
        return self.values.size

    def __getitem__(self, n):
        return self.values[n]


# Transforms up to this length are seeded by one dense DFT per row.
_BASE = 32


def dft_forward(samples):
    """Unnormalized DFT with positive exponent, A_n = sum_k s_k exp(+2 pi i n k / M).

    Radix-2 decimation in time, vectorized along the long axis. Row j of the
    initial (M/B, B) array is the dense B-point DFT of s[j::M/B]; every stage
    then merges rows j and j + rows/2 into transforms of twice the length,
    so a stage is one array operation on rows of at least B contiguous
    entries. Cost is O(M log M) for power-of-two M; other lengths fall back
    to direct O(M^2) summation.
    """
    s = np.asarray(samples, dtype=complex).ravel()
    M = s.size
    if M == 0:
        raise ValueError("empty input")
    if not is_power_of_two(M):
        k = np.arange(M)
        return np.exp(2j * np.pi * (np.outer(k, k) % M) / M) @ s
    base = min(M, _BASE)
    k = np.arange(base)
    dense = np.exp(2j * np.pi * (np.outer(k, k) % base) / base)
    cur = np.empty(M, dtype=complex)
    nxt = np.empty(M, dtype=complex)
    np.matmul(s.reshape(base, -1).T, dense, out=cur.reshape(-1, base))
    twiddle = np.exp(2j * np.pi * np.arange(M // 2) / M)
    n = base
    while n < M:
        half = M // (2 * n)
        X = cur.reshape(2 * half, n)
        Y = nxt.reshape(half, 2 * n)
        lo, hi = X[:half], X[half:]
        # exp(i pi q / n) = twiddle[q * M / (2n)]; scaled in place to keep
        # the working set at two buffers
        np.multiply(hi, twiddle[::half], out=hi)
        np.add(lo, hi, out=Y[:, :n])
        np.subtract(lo, hi, out=Y[:, n:])
        cur, nxt = nxt, cur
        n *= 2
    return cur


def coefficients_from_grid(grid, N):
    """Legendre coefficients c_0 .. c_{N-1} from a sampled hfhat grid."""
    N = check_positive_int(N, "N")
    M = grid.M
    if N > M // 2:
        raise AliasingError(f"N = {N} exceeds M/2 = {M // 2}; enlarge the grid")
    A = dft_forward(grid.samples)[:N]
    n = np.arange(N)
    sign = np.where(n % 2, -1.0, 1.0)
    a = (2.0 * np.pi / M) * sign * A
    scale = 2 * n + 1
    values = scale * a.real
    imag = float(np.max(np.abs(scale * a.imag)))
    params = {"method": "fft", "N": N, "M": M, "K": grid.quad_order, "spec_label": grid.spec_label}
    return LegendreCoefficients(values, imag, params)


def legendre_transform(spec, N, M=None, rule=None):
    """First N Legendre coefficients of ``spec`` in O(M K + M log M) work.

    Parameters
    ----------
    spec : FunctionSpec
        Integrand (any vectorized callable with a ``breakpoints`` attribute).
    N : int
        Number of coefficients.
    M : int, optional
        Grid size, a power of two with M >= 2N. Defaults to the smallest
        power of two >= max(4N, 1024).
    rule : QuadratureRule, optional
        Rule for the Abel integral; 64-point Gauss--Legendre by default.
    """
    N = check_positive_int(N, "N")
    M = default_grid_size(N) if M is None else check_positive_int(M, "M")
    if N > M // 2:
        raise AliasingError(f"N = {N} exceeds M/2 = {M // 2}; enlarge the grid")
    if not is_power_of_two(M):
        raise ValueError(f"grid size must be a power of two, got {M}")
    rule = gauss_legendre(DEFAULT_QUAD_ORDER) if rule is None else rule
    return coefficients_from_grid(sample_grid(spec, M, rule), N)


def sine_form_transform(spec, N, J, rule=None):
    """Slow real-arithmetic cross-check of :func:`legendre_transform`.

    c_n = (2/pi) (n + 1/2) int_0^pi phi(y) sin((n + 1/2) y) dy, evaluated by
    composite Gauss--Legendre over J equal panels of [0, pi], using ``rule``
    both on each panel and for phi itself. Half-integer frequencies rule
    out an FFT here; cost is O(N J K).
    """
    N = check_positive_int(N, "N")
    J = check_positive_int(J, "J")
    if J < 2:
        raise ValueError("J must be >= 2")
    rule = gauss_legendre(DEFAULT_QUAD_ORDER) if rule is None else rule
    edges = np.linspace(0.0, np.pi, J + 1)
    y, w = rule.on(edges[:-1], edges[1:])
    y = y.ravel()
    w = w.ravel()
    weighted = w * phi_values(spec, y, rule)
    nu = np.arange(N) + 0.5
    values = np.empty(N)
    for start in range(0, N, 64):
        block = nu[start : start + 64]
        values[start : start + 64] = np.sin(np.outer(block, y)) @ weighted
    values *= (2.0 / np.pi) * nu
    params = {"method": "sine", "N": N, "J": J, "K": rule.order, "spec_label": getattr(spec, "label", "")}
    return LegendreCoefficients(values, 0.0, params)
