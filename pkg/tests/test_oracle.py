import numpy as np
import pytest

from fastlegendre import CATALOG, FunctionSpec, abs32_reference_coeff, compare, legendre_transform, oracle_coefficients
from fastlegendre.spectral import LegendreCoefficients


def test_constant():
    np.testing.assert_allclose(oracle_coefficients(FunctionSpec("one"), 4, 32).values, [1, 0, 0, 0], atol=1e-14)


@pytest.mark.parametrize("k,N", [(6, 8), (0, 5), (11, 20)])
def test_one_hot(k, N):
    Q = N + k
    c = oracle_coefficients(FunctionSpec("pk", k=k), N, Q)
    np.testing.assert_allclose(c.values, np.eye(N)[k], atol=1e-13)


def test_abs32_split():
    c = oracle_coefficients(FunctionSpec("abs32"), 32, 512)
    ref = np.array([abs32_reference_coeff(n) for n in range(32)])
    assert np.max(np.abs(c.values - ref)) <= 1e-10


@pytest.mark.parametrize("spec", [s for s in CATALOG], ids=lambda s: s.label)
def test_self_convergence(spec):
    a = oracle_coefficients(spec, 64)
    b = oracle_coefficients(spec, 64, 2 * a.params["Q"])
    assert np.max(np.abs(a.values - b.values)) <= 1e-12


def test_q_too_small():
    with pytest.raises(ValueError, match="Q"):
        oracle_coefficients(FunctionSpec("exp"), 16, 8)


def test_params():
    c = oracle_coefficients(FunctionSpec("exp"), 8)
    assert c.params == {"method": "oracle", "N": 8, "Q": 256, "spec_label": "exp"}


class TestCompare:
    def test_identity(self):
        c = oracle_coefficients(FunctionSpec("x"), 4)
        assert compare(c, c).max_abs_error == 0.0

    def test_arithmetic(self):
        r = compare([1.0, 0.0], [1.0, 1e-9])
        assert r.max_abs_error == 1e-9 and r.n_at_max == 1
        np.testing.assert_array_equal(r.per_index_abs_error, [0.0, 1e-9])

    def test_fast_vs_reference(self):
        fast = legendre_transform(FunctionSpec("abs32"), 32, 8192)
        ref = LegendreCoefficients([abs32_reference_coeff(n) for n in range(32)])
        r = compare(fast, ref)
        assert r.max_abs_error <= 1e-8
        assert r.max_abs_error == np.max(r.per_index_abs_error)
        assert np.all(np.isfinite(r.per_index_abs_error)) and np.all(r.per_index_abs_error >= 0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            compare([1.0], [1.0, 2.0])

    def test_timings_carried(self):
        r = compare([1.0], [1.0], fast_seconds=0.1, oracle_seconds=2.0)
        assert (r.fast_seconds, r.oracle_seconds) == (0.1, 2.0)
