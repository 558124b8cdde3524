"""Catalog of integrands f on [-1, 1], the ``--function`` grammar and CSV samples.

Grammar::

    one | x | abs32 | exp | cosh | rational:<gamma> | pk:<k> | file:<path>[:linear|:cubic]
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ._validation import check_domain
from .legendre import legendre_p

__all__ = [
    "FunctionSpec",
    "SampledFunction",
    "SpecParseError",
    "SampleValidationError",
    "evaluate",
    "parse_spec",
    "render",
    "load_samples",
    "CATALOG",
]

SIMPLE_KINDS = ("one", "x", "abs32", "exp", "cosh")
INTERPOLATIONS = ("linear", "cubic")


class SpecParseError(ValueError):
    """Raised for text that does not match the function grammar."""

    def __init__(self, message, token):
        super().__init__(f"{message}: {token!r}")
        self.token = token


class SampleValidationError(ValueError):
    """Raised for sampled data that does not describe a function on [-1, 1]."""


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Tabulated f(x) on [-1, 1] with linear or cubic (not-a-knot) interpolation.

    Cubic interpolation adds an O(h^4) model error on top of whatever the
    transform itself commits.
    """

    abscissas: np.ndarray
    values: np.ndarray
    interpolation: str = "cubic"
    source: str | None = None
    _spline: object = field(init=False, repr=False, default=None)

    def __post_init__(self):
        x = np.array(self.abscissas, dtype=float)
        v = np.array(self.values, dtype=float)
        if x.ndim != 1 or v.ndim != 1 or x.size != v.size:
            raise SampleValidationError("abscissas and values must be 1-D vectors of equal length")
        if x.size < 2:
            raise SampleValidationError("need at least two samples")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(v))):
            raise SampleValidationError("samples must be finite")
        if np.any(np.diff(x) <= 0):
            raise SampleValidationError("abscissas must be strictly increasing")
        if x[0] != -1.0 or x[-1] != 1.0:
            raise SampleValidationError(
                f"abscissas must start at -1 and end at +1, got [{x[0]!r}, {x[-1]!r}]"
            )
        if self.interpolation not in INTERPOLATIONS:
            raise SampleValidationError(f"unknown interpolation {self.interpolation!r}")
        x.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "abscissas", x)
        object.__setattr__(self, "values", v)
        if self.interpolation == "cubic" and x.size >= 4:
            from scipy.interpolate import CubicSpline

            object.__setattr__(self, "_spline", CubicSpline(x, v))

    def __call__(self, x):
        if self._spline is not None:
            return self._spline(x)
        # linear, or too few points for a not-a-knot cubic
        return np.interp(x, self.abscissas, self.values)


@dataclass(frozen=True)
class FunctionSpec:
    """Immutable description of an integrand f on [-1, 1].

    Instances are vectorized callables: ``spec(x)`` evaluates f without a
    domain check (use :func:`evaluate` for the checked version).
    ``breakpoints`` lists interior points where f is not smooth; the
    quadrature routines split their integrals there.
    """

    kind: str
    gamma: float | None = None
    k: int | None = None
    table: SampledFunction | None = field(default=None, compare=False)
    label: str = ""

    def __post_init__(self):
        if self.kind in SIMPLE_KINDS:
            pass
        elif self.kind == "rational":
            if self.gamma is None or not math.isfinite(self.gamma) or self.gamma <= 0:
                raise ValueError(f"rational requires gamma > 0, got {self.gamma!r}")
        elif self.kind == "pk":
            if self.k is None or int(self.k) != self.k or self.k < 0:
                raise ValueError(f"pk requires a non-negative integer k, got {self.k!r}")
        elif self.kind == "sampled":
            if not isinstance(self.table, SampledFunction):
                raise ValueError("sampled requires a SampledFunction table")
        else:
            raise ValueError(f"unknown function kind {self.kind!r}")
        if not self.label:
            object.__setattr__(self, "label", render(self))

    @property
    def breakpoints(self):
        return (0.0,) if self.kind == "abs32" else ()

    @property
    def is_even(self):
        return self.kind in ("one", "abs32", "cosh") or (self.kind == "pk" and self.k % 2 == 0)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        kind = self.kind
        if kind == "one":
            return np.ones_like(x)
        if kind == "x":
            return x.copy()
        if kind == "abs32":
            return np.abs(x) ** 1.5
        if kind == "exp":
            return np.exp(x)
        if kind == "cosh":
            return np.cosh(x)
        if kind == "rational":
            return (1.0 + x) / (self.gamma**2 + x * x)
        if kind == "pk":
            return legendre_p(self.k, np.clip(x, -1.0, 1.0))
        return self.table(x)


def evaluate(spec, x):
    """f(x) for ``spec``; raises ``ValueError`` if any |x| > 1."""
    x = check_domain(x)
    out = spec(x)
    return out if np.ndim(out) else float(out)


def render(spec):
    """Inverse of :func:`parse_spec` (for sampled specs only when loaded from a file)."""
    if spec.kind in SIMPLE_KINDS:
        return spec.kind
    if spec.kind == "rational":
        return f"rational:{spec.gamma!r}"
    if spec.kind == "pk":
        return f"pk:{spec.k}"
    src = spec.table.source
    return f"file:{src}:{spec.table.interpolation}" if src else "sampled"


def _parse_float(token):
    try:
        value = float(token)
    except ValueError:
        raise SpecParseError("expected a number", token) from None
    if not math.isfinite(value):
        raise SpecParseError("expected a finite number", token)
    return value


def load_samples(path, interpolation="cubic"):
    """Read ``x,f`` rows from a CSV file into a :class:`SampledFunction`.

    A non-numeric first row is treated as a header.
    """
    path = Path(path)
    xs, fs = [], []
    with path.open(newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != 2:
                raise SampleValidationError(f"{path}:{lineno}: expected 2 columns, got {len(row)}")
            try:
                x, f = float(row[0]), float(row[1])
            except ValueError:
                if lineno == 1 and not xs:
                    continue
                raise SampleValidationError(f"{path}:{lineno}: non-numeric row {row!r}") from None
            xs.append(x)
            fs.append(f)
    return SampledFunction(np.array(xs), np.array(fs), interpolation, source=str(path))


def parse_spec(text):
    """Parse a ``--function`` argument into a :class:`FunctionSpec`."""
    text = text.strip()
    if text in SIMPLE_KINDS:
        return FunctionSpec(text)
    head, sep, rest = text.partition(":")
    if not sep:
        raise SpecParseError("unknown function", text)
    if head == "rational":
        return FunctionSpec("rational", gamma=_parse_float(rest))
    if head == "pk":
        if not rest.isdigit():
            raise SpecParseError("expected a non-negative integer", rest)
        return FunctionSpec("pk", k=int(rest))
    if head == "file":
        path, interpolation = rest, "cubic"
        stem, colon, suffix = rest.rpartition(":")
        if colon and suffix in INTERPOLATIONS:
            path, interpolation = stem, suffix
        if not path:
            raise SpecParseError("missing file path", text)
        table = load_samples(path, interpolation)
        return FunctionSpec("sampled", table=table)
    raise SpecParseError("unknown function", head)


CATALOG = (
    FunctionSpec("one"),
    FunctionSpec("x"),
    FunctionSpec("abs32"),
    FunctionSpec("exp"),
    FunctionSpec("cosh"),
    FunctionSpec("rational", gamma=0.5),
    FunctionSpec("rational", gamma=1.0),
    FunctionSpec("pk", k=3),
    FunctionSpec("pk", k=7),
)
