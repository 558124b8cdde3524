"""Legendre polynomials, series evaluation and reference coefficients."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ._validation import check_coefficients, check_domain, check_nonneg_int

__all__ = [
    "legendre_p",
    "legendre_p_all",
    "clenshaw_eval",
    "abs32_reference_coeff",
    "abs32_reference_exact",
    "abs32_reference_coeffs",
    "dirichlet_murphy_p",
]

ALPHA = 1.5


def legendre_p(n, x):
    """Evaluate P_n(x) by the forward three-term recurrence.

    ``x`` may be a scalar or an array; values outside [-1, 1] raise
    ``ValueError``.
    """
    n = check_nonneg_int(n, "n")
    x = check_domain(x)
    p0 = np.ones_like(x)
    if n == 0:
        return p0 if p0.ndim else float(p0)
    p1 = x.copy()
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * x * p1 - k * p0) / (k + 1)
    return p1 if p1.ndim else float(p1)


def legendre_p_all(n_max, x):
    """Rows P_0(x) .. P_{n_max}(x); shape ``(n_max + 1,) + x.shape``."""
    n_max = check_nonneg_int(n_max, "n_max")
    x = check_domain(x)
    out = np.empty((n_max + 1,) + x.shape)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = x
    for k in range(1, n_max):
        out[k + 1] = ((2 * k + 1) * x * out[k] - k * out[k - 1]) / (k + 1)
    return out


def clenshaw_eval(coeffs, x):
    """Evaluate sum_n coeffs[n] * P_n(x) by Clenshaw's backward recurrence.

    Parameters
    ----------
    coeffs : array_like, shape (N,)
        Legendre coefficients c_0 .. c_{N-1}, N >= 1.
    x : float or array_like
        Evaluation points in [-1, 1].
    """
    c = check_coefficients(coeffs)
    x = check_domain(x)
    # P_{k+1} = alpha_k P_k + beta_{k+1} P_{k-1}, alpha_k = (2k+1)x/(k+1), beta_k = -k/(k+1)
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    for k in range(c.size - 1, 0, -1):
        alpha = (2 * k + 1) / (k + 1) * x
        beta = -(k + 1) / (k + 2)
        b1, b2 = c[k] + alpha * b1 + beta * b2, b1
    result = c[0] + x * b1 - 0.5 * b2
    return result if result.ndim else float(result)


def abs32_reference_coeff(n):
    """Closed-form Legendre coefficient c_n of f(x) = |x|^{3/2}.

    Even n >= 2 use the running product of ratios (alpha - j)/(alpha + j + 3)
    so large n neither overflows nor underflows prematurely.
    """
    n = check_nonneg_int(n, "n")
    a = ALPHA
    if n % 2:
        return 0.0
    if n == 0:
        return 1.0 / (a + 1.0)
    ratio = a / ((a + 1.0) * (a + 3.0))
    for j in range(2, n, 2):
        ratio *= (a - j) / (a + j + 3.0)
    return (2 * n + 1) * ratio


def abs32_reference_exact(n):
    """Same coefficient as :func:`abs32_reference_coeff`, as an exact Fraction."""
    n = check_nonneg_int(n, "n")
    a = Fraction(3, 2)
    if n % 2:
        return Fraction(0)
    if n == 0:
        return 1 / (a + 1)
    ratio = a / ((a + 1) * (a + 3))
    for j in range(2, n, 2):
        ratio *= (a - j) / (a + j + 3)
    return (2 * n + 1) * ratio


def abs32_reference_coeffs(N):
    return np.array([abs32_reference_coeff(n) for n in range(N)])


def dirichlet_murphy_p(n, x_angle, rule):
    """P_n(cos x) from the Dirichlet--Murphy integral.

    Evaluates ``(-i/pi) * int_x^{2pi-x} exp(i(n+1/2)y) / sqrt(2(cos x - cos y)) dy``
    numerically. The interval is split at y = pi; the halves use
    y = x + (pi-x) t^2 and y = 2pi - x - (pi-x) t^2, which cancel the
    inverse square-root endpoint singularities. Both substitutions give
    the same cos y, so the denominators are shared.

    Returns a complex number whose real part approximates P_n(cos x) and
    whose imaginary part is pure quadrature residue.
    """
    n = check_nonneg_int(n, "n")
    x = float(x_angle)
    if not 0.0 < x < np.pi:
        raise ValueError(f"x_angle must lie in (0, pi), got {x_angle!r}")
    t = rule.nodes
    w = rule.weights
    span = np.pi - x
    u = span * t * t
    # cos x - cos(x + u) = 2 sin(x + u/2) sin(u/2), free of cancellation as u -> 0
    denom = np.sqrt(4.0 * np.sin(x + 0.5 * u) * np.sin(0.5 * u))
    # dy = 2 (pi - x) t dt; t / denom stays bounded as t -> 0
    jac = 2.0 * span * t / denom
    nu = n + 0.5
    y_left = x + u
    y_right = 2.0 * np.pi - x - u
    total = np.sum(w * jac * (np.exp(1j * nu * y_left) + np.exp(1j * nu * y_right)))
    return complex(-1j / np.pi * total)
