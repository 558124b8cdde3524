"""Legendre coefficients from one FFT of an Abel-type transform of f."""

from .abel import AbelGrid, hfhat, phi, sample_grid
from .functions import CATALOG, FunctionSpec, SampledFunction, evaluate, parse_spec, render
from .legendre import abs32_reference_coeff, clenshaw_eval, dirichlet_murphy_p, legendre_p
from .oracle import ComparisonReport, compare, oracle_coefficients
from .quadrature import QuadratureRule, gauss_legendre
from .spectral import (
    AliasingError,
    LegendreCoefficients,
    coefficients_from_grid,
    dft_forward,
    legendre_transform,
    sine_form_transform,
)

__version__ = "0.1.0"


def __getattr__(name):
    # keeps sklearn out of the import path of the CLI
    if name == "LegendreExpansion":
        from .estimator import LegendreExpansion

        return LegendreExpansion
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "AbelGrid",
    "AliasingError",
    "CATALOG",
    "ComparisonReport",
    "FunctionSpec",
    "LegendreCoefficients",
    "LegendreExpansion",
    "QuadratureRule",
    "SampledFunction",
    "abs32_reference_coeff",
    "clenshaw_eval",
    "coefficients_from_grid",
    "compare",
    "dft_forward",
    "dirichlet_murphy_p",
    "evaluate",
    "gauss_legendre",
    "hfhat",
    "legendre_p",
    "legendre_transform",
    "oracle_coefficients",
    "parse_spec",
    "phi",
    "render",
    "sample_grid",
    "sine_form_transform",
]
