import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fastlegendre.functions import (
    CATALOG,
    FunctionSpec,
    SampledFunction,
    SampleValidationError,
    SpecParseError,
    evaluate,
    load_samples,
    parse_spec,
    render,
)
from fastlegendre.legendre import legendre_p


def test_evaluate_examples():
    assert evaluate(FunctionSpec("abs32"), -0.5) == pytest.approx(0.35355339059327373, rel=1e-16)
    assert evaluate(FunctionSpec("rational", gamma=1.0), 1.0) == 1.0
    assert evaluate(FunctionSpec("pk", k=4), 0.0) == pytest.approx(0.375, abs=1e-16)


def test_evaluate_domain():
    with pytest.raises(ValueError):
        evaluate(FunctionSpec("exp"), 1.01)


@pytest.mark.parametrize("k", [0, 1, 4, 11])
def test_pk_delegates_to_legendre_p(k):
    x = np.linspace(-1, 1, 33)
    assert np.array_equal(evaluate(FunctionSpec("pk", k=k), x), legendre_p(k, x))


def test_parse_examples():
    assert parse_spec("rational:0.5") == FunctionSpec("rational", gamma=0.5)
    assert parse_spec("pk:7") == FunctionSpec("pk", k=7)
    with pytest.raises(ValueError, match="gamma"):
        parse_spec("rational:0")


@pytest.mark.parametrize("bad", ["", "sin", "pk:", "pk:-1", "pk:2.5", "rational:abc", "rational:nan", "file:"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_spec(bad)


def test_parse_error_carries_token():
    with pytest.raises(SpecParseError) as info:
        parse_spec("rational:zz")
    assert info.value.token == "zz"


@pytest.mark.parametrize("spec", CATALOG, ids=lambda s: s.label)
def test_round_trip_catalog(spec):
    assert parse_spec(render(spec)) == spec


@given(st.floats(min_value=1e-6, max_value=1e6, allow_nan=False))
def test_round_trip_rational(gamma):
    spec = FunctionSpec("rational", gamma=gamma)
    assert parse_spec(render(spec)) == spec


@given(st.integers(min_value=0, max_value=10_000))
def test_round_trip_pk(k):
    assert parse_spec(render(FunctionSpec("pk", k=k))) == FunctionSpec("pk", k=k)


def test_specs_are_immutable():
    spec = FunctionSpec("exp")
    with pytest.raises(AttributeError):
        spec.kind = "cosh"


def _write_csv(path, x, f, header=True, newline="\n"):
    lines = (["x,f"] if header else []) + [f"{float(a)!r},{float(b)!r}" for a, b in zip(x, f)]
    path.write_bytes(newline.join(lines).encode() + newline.encode())


@pytest.mark.parametrize("name", ["exp", "cosh"])
def test_cubic_sampled_tracks_analytic(tmp_path, name):
    x = np.linspace(-1, 1, 2001)
    x[0], x[-1] = -1.0, 1.0
    fn = getattr(np, name)
    path = tmp_path / "f.csv"
    _write_csv(path, x, fn(x))
    spec = parse_spec(f"file:{path}")
    xs = np.linspace(-1, 1, 5003)
    assert np.max(np.abs(spec(xs) - fn(xs))) <= 1e-9


def test_csv_variants(tmp_path):
    x = np.linspace(-1, 1, 11)
    path = tmp_path / "crlf.csv"
    _write_csv(path, x, x**2, header=False, newline="\r\n")
    spec = parse_spec(f"file:{path}:linear")
    assert spec.table.interpolation == "linear"
    assert spec(0.05) == pytest.approx(0.25 * 0.04)
    assert render(spec) == f"file:{path}:linear"


def test_csv_validation(tmp_path):
    path = tmp_path / "bad.csv"
    _write_csv(path, [-1.0, 0.5, 0.2, 1.0], [0, 0, 0, 0])
    with pytest.raises(SampleValidationError, match="increasing"):
        parse_spec(f"file:{path}")
    _write_csv(path, [-0.9, 1.0], [0, 0])
    with pytest.raises(SampleValidationError, match="start at -1"):
        parse_spec(f"file:{path}")
    path.write_text("x,f\n-1,0\nfoo,bar\n1,0\n")
    with pytest.raises(SampleValidationError):
        load_samples(path)


def test_csv_missing_file(tmp_path):
    with pytest.raises(OSError):
        parse_spec(f"file:{tmp_path / 'nope.csv'}")


def test_sampled_direct_construction():
    table = SampledFunction([-1.0, 1.0], [1.0, 3.0])
    spec = FunctionSpec("sampled", table=table)
    assert evaluate(spec, 0.0) == pytest.approx(2.0)
    with pytest.raises(SampleValidationError):
        SampledFunction([-1.0], [1.0])
