"""scikit-learn compatible wrapper around the FFT Legendre transform."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from ._validation import check_domain
from .functions import FunctionSpec, SampledFunction, parse_spec
from .legendre import clenshaw_eval
from .quadrature import gauss_legendre
from .spectral import legendre_transform

__all__ = ["LegendreExpansion"]


def _column(X):
    X = np.asarray(X)
    if X.ndim == 2 and X.shape[1] != 1:
        raise ValueError(f"expected a single feature column, got shape {X.shape}")
    return check_domain(X.reshape(-1))


class LegendreExpansion(RegressorMixin, BaseEstimator):
    """Truncated Legendre series of a function on [-1, 1].

    Parameters
    ----------
    n_coefs : int, default=32
        Number of coefficients N.
    grid_size : int or None, default=None
        FFT grid size M (power of two, >= 2N). ``None`` picks the smallest
        power of two >= max(4N, 1024).
    quad_order : int, default=64
        Gauss--Legendre order for the Abel integral.
    function : str, FunctionSpec or None, default=None
        Integrand to expand. If ``None``, :meth:`fit` interpolates the
        training samples instead.
    interpolation : {"cubic", "linear"}, default="cubic"
        Interpolant used when fitting from samples.

    Attributes
    ----------
    coef_ : ndarray of shape (n_coefs,)
    imag_residual_ : float
    grid_size_ : int
    spec_ : FunctionSpec
    """

    def __init__(self, n_coefs=32, grid_size=None, quad_order=64, function=None, interpolation="cubic"):
        self.n_coefs = n_coefs
        self.grid_size = grid_size
        self.quad_order = quad_order
        self.function = function
        self.interpolation = interpolation

    def _resolve_spec(self, X, y):
        if self.function is not None:
            if isinstance(self.function, FunctionSpec):
                return self.function
            return parse_spec(self.function)
        if X is None or y is None:
            raise ValueError("fit needs samples (X, y) when no function is set")
        X, y = check_X_y(np.asarray(X).reshape(len(y), -1), y, y_numeric=True)
        x = _column(X)
        order = np.argsort(x)
        return FunctionSpec("sampled", table=SampledFunction(x[order], y[order], self.interpolation))

    def fit(self, X=None, y=None):
        spec = self._resolve_spec(X, y)
        result = legendre_transform(spec, self.n_coefs, self.grid_size, gauss_legendre(self.quad_order))
        self.spec_ = spec
        self.coef_ = result.values
        self.imag_residual_ = result.imag_residual
        self.grid_size_ = result.params["M"]
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_array(np.asarray(X, dtype=float).reshape(-1, 1))
        return np.asarray(clenshaw_eval(self.coef_, _column(X)), dtype=float)
