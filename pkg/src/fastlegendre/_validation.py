"""Input validation helpers shared by the library and the estimator."""

from __future__ import annotations

import numbers

import numpy as np


def check_nonneg_int(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return int(value)


def check_positive_int(value, name):
    value = check_nonneg_int(value, name)
    if value == 0:
        raise ValueError(f"{name} must be positive")
    return value


def is_power_of_two(m):
    return m >= 1 and (m & (m - 1)) == 0


def check_grid_size(M):
    M = check_positive_int(M, "M")
    if M < 4 or M % 2:
        raise ValueError(f"grid size M must be even and >= 4, got {M}")
    return M


def check_domain(x):
    """Return ``x`` as a float array, raising ``ValueError`` if any |x| > 1."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("x must be finite")
    if np.any(np.abs(x) > 1.0):
        raise ValueError("x must lie in [-1, 1]")
    return x


def check_coefficients(coeffs):
    c = np.asarray(coeffs, dtype=float)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("coefficients must be a non-empty 1-D vector")
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficients must be finite")
    return c


def default_grid_size(N):
    """Smallest power of two >= max(4N, 1024)."""
    N = check_positive_int(N, "N")
    target = max(4 * N, 1024)
    return 1 << (target - 1).bit_length()


def default_oracle_order(N):
    return max(2 * check_positive_int(N, "N"), 256)
