"""Abel-type transform of f and its uniform sampling on [-pi, pi).

For y in [0, pi] the transform is

    phi(y) = int_{cos y}^1 f(x) / sqrt(2 (x - cos y)) dx.

Substituting x = cos y + (1 - cos y) t^2 removes the endpoint singularity:

    phi(y) = 2 sin(y/2) int_0^1 f(cos y + (1 - cos y) t^2) dt,

and the remaining integral is done with a Gauss--Legendre rule on [0, 1].
The complex 2pi-periodic transform is

    hfhat(y) = sign(y) exp(iy/2) phi(|y|) / (2 pi i),

which obeys hfhat(y) = -exp(iy) hfhat(-y).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._validation import check_grid_size

__all__ = ["AbelGrid", "phi", "phi_values", "hfhat", "sample_grid", "grid_abscissas"]

# Rows of the (n_y, K) evaluation block processed at once.
_CHUNK = 1024


@dataclass(frozen=True, eq=False)
class AbelGrid:
    """``M`` samples of hfhat at y_k = -pi + 2 pi k / M, k = 0 .. M-1."""

    M: int
    samples: np.ndarray
    quad_order: int
    spec_label: str

    @property
    def y(self):
        return grid_abscissas(self.M)


def grid_abscissas(M):
    return -np.pi + 2.0 * np.pi * np.arange(M) / M


def _graded_piece(lo, hi, rule, left_kink, right_kink):
    """Nodes/weights on [lo, hi] (per row), clustered quadratically toward kinks.

    f has a |x - b|^a type kink at a breakpoint b; with t = t_b + L s^2 the
    integrand picks up a factor s^(2a+1) and becomes smooth in s, so the
    rule converges spectrally instead of algebraically.
    """
    s = rule.nodes
    ws = rule.weights
    lo = lo[:, None]
    length = (hi - lo[:, 0])[:, None]
    if left_kink and right_kink:
        t = lo + length * s * s * (3.0 - 2.0 * s)
        w = length * 6.0 * s * (1.0 - s) * ws
    elif left_kink:
        t = lo + length * s * s
        w = length * 2.0 * s * ws
    elif right_kink:
        u = 1.0 - s
        t = lo + length * (1.0 - u * u)
        w = length * 2.0 * u * ws
    else:
        t = lo + length * s
        w = length * ws
    return t, w


def _inner_integral(spec, c, one_minus_c, rule):
    """int_0^1 f(c + (1 - c) t^2) dt for a vector of c.

    The t-interval is split at the preimages of f's breakpoints, and pieces
    touching a breakpoint are graded toward it.
    """
    if not spec.breakpoints:
        # one piece, nodes shared by every row
        x = c[:, None] + one_minus_c[:, None] * (rule.nodes * rule.nodes)
        return spec(x) @ rule.weights
    cuts = [np.zeros_like(c)]
    for b in sorted(spec.breakpoints):
        # preimage of x = b; pieces collapse to zero width when b <= c
        tb = np.sqrt(np.clip((b - c) / one_minus_c, 0.0, 1.0))
        cuts.append(tb)
    cuts.append(np.ones_like(c))
    last = len(cuts) - 2
    total = np.zeros_like(c)
    for i, (lo, hi) in enumerate(zip(cuts[:-1], cuts[1:])):
        t, w = _graded_piece(lo, hi, rule, i > 0, i < last)
        x = c[:, None] + one_minus_c[:, None] * t * t
        total += np.einsum("ij,ij->i", w, spec(np.minimum(x, 1.0)))
    return total


def phi_values(spec, y, rule):
    """Vectorized phi(y) for an array of y in [0, pi] (no domain check)."""
    y = np.asarray(y, dtype=float)
    flat = y.ravel()
    out = np.empty_like(flat)
    for start in range(0, flat.size, _CHUNK):
        yy = flat[start : start + _CHUNK]
        half_sin = np.sin(0.5 * yy)
        c = np.cos(yy)
        one_minus_c = 2.0 * half_sin * half_sin
        inner = np.zeros_like(yy)
        nz = one_minus_c > 0.0
        if np.any(nz):
            inner[nz] = _inner_integral(spec, c[nz], one_minus_c[nz], rule)
        out[start : start + _CHUNK] = 2.0 * half_sin * inner
    return out.reshape(y.shape)


def phi(spec, y, rule):
    """phi(y) for a single y in [0, pi]; phi(0) = 0."""
    y = float(y)
    if not 0.0 <= y <= np.pi:
        raise ValueError(f"y must lie in [0, pi], got {y!r}")
    return float(phi_values(spec, np.array([y]), rule)[0])


def hfhat(spec, y, rule):
    """hfhat(y) for a single y in [-pi, pi].

    Values at y > 0 are computed from the definition; values at y < 0 are
    obtained as -exp(iy) hfhat(-y), so the symmetry holds bit for bit.
    """
    y = float(y)
    if not -np.pi <= y <= np.pi:
        raise ValueError(f"y must lie in [-pi, pi], got {y!r}")
    if y == 0.0:
        return 0j
    value = np.exp(0.5j * abs(y)) * phi(spec, abs(y), rule) / (2j * np.pi)
    if y > 0:
        return complex(value)
    return complex(-np.exp(1j * y) * value)


def sample_grid(spec, M, rule):
    """Sample hfhat on the grid y_k = -pi + 2 pi k / M.

    phi is evaluated once for each |y_k| (k = 0 .. M/2). The non-positive
    half of the grid comes straight from the definition and the positive
    half is filled as samples[M/2 + k] = -exp(i y) samples[M/2 - k] with
    y = 2 pi k / M, so the reflection symmetry is exact in floating point
    when the right-hand side is evaluated with scalar (IEEE, unfused)
    complex multiplication.
    """
    M = check_grid_size(M)
    h = M // 2
    j = np.arange(h + 1)
    y_abs = 2.0 * np.pi * j / M
    y_abs[h] = np.pi
    phis = phi_values(spec, y_abs, rule)

    # y = -|y|: hfhat = -exp(-i|y|/2) phi / (2 pi i) = (sin(|y|/2) + i cos(|y|/2)) phi / (2 pi)
    scaled = phis[1:] / (2.0 * np.pi)
    half_angle = 0.5 * y_abs[1:]
    samples = np.empty(M, dtype=complex)
    neg = samples[h - 1 :: -1]  # index h - j holds y = -2 pi j / M; index 0 is y = -pi
    neg.real = np.sin(half_angle) * scaled
    neg.imag = np.cos(half_angle) * scaled
    samples[h] = 0.0
    # Spelled out in real arithmetic (one rounding per product, as in scalar
    # complex multiplication): numpy's vectorized complex multiply may use
    # fused multiply-add on some CPUs and differ in the last bit.
    e = np.exp(1j * (2.0 * np.pi * j[1:h] / M))
    src = samples[h - 1 : 0 : -1]
    pos = samples[h + 1 :]
    pos.real = src.imag * e.imag - src.real * e.real
    pos.imag = -(src.imag * e.real) - src.real * e.imag
    samples.setflags(write=False)
    return AbelGrid(M, samples, rule.order, getattr(spec, "label", repr(spec)))
