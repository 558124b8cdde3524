import numpy as np
import pytest

from fastlegendre.quadrature import gauss_legendre

ACCEPTANCE_LINES = []


def record_acceptance(label, passed, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'}  {label}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def rule64():
    return gauss_legendre(64)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240611)


def direct_dft(s):
    """O(M^2) positive-exponent DFT, independent of the fast transform."""
    s = np.asarray(s, dtype=complex)
    M = s.size
    k = np.arange(M)
    return np.exp(2j * np.pi * np.outer(k, k) / M) @ s
