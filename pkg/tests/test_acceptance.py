"""End-to-end acceptance criteria; each test records one PASS/FAIL line in the terminal summary."""

import csv
import io
import subprocess
import sys
import time

import numpy as np
from conftest import record_acceptance

from fastlegendre import (
    CATALOG,
    FunctionSpec,
    abs32_reference_coeff,
    clenshaw_eval,
    dirichlet_murphy_p,
    gauss_legendre,
    legendre_p,
    legendre_transform,
    oracle_coefficients,
    sample_grid,
    sine_form_transform,
)
from fastlegendre.bench import median_time, run_bench


def test_1_table1_reproduction():
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "fastlegendre", "table1", "--m", "8192", "--k", "64"],
        capture_output=True,
        text=True,
        check=False,
    )
    elapsed = time.perf_counter() - start
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    errors = [abs(float(r["computed_cn"]) - abs32_reference_coeff(int(r["n"]))) for r in rows]
    ok = (
        proc.returncode == 0
        and [int(r["n"]) for r in rows] == list(range(0, 31, 2))
        and max(errors) <= 1e-8
        and elapsed < 5.0
    )
    record_acceptance("1 table1 reproduction", ok, f"max error {max(errors):.2e}, {elapsed:.2f} s, exit {proc.returncode}")
    assert ok


def test_2_orthogonality_recovery():
    worst = 0.0
    for k in (0, 3, 7, 15):
        c = legendre_transform(FunctionSpec("pk", k=k), 32, 4096, gauss_legendre(64)).values
        worst = max(worst, np.max(np.abs(c - np.eye(32)[k])))
    ok = worst <= 1e-10
    record_acceptance("2 orthogonality recovery", ok, f"max deviation {worst:.2e}")
    assert ok


def test_3_oracle_agreement():
    worst = {}
    for text in ("exp", "cosh", "rational:1.0", "rational:0.5"):
        spec = next(s for s in CATALOG if s.label == text)
        fast = legendre_transform(spec, 64, 16384, gauss_legendre(64)).values
        slow = oracle_coefficients(spec, 64, 512).values
        worst[text] = float(np.max(np.abs(fast - slow)))
    ok = max(worst.values()) <= 1e-10
    record_acceptance("3 oracle agreement", ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items()))
    assert ok


def test_4_symmetry_invariant():
    rule = gauss_legendre(64)
    mismatches = checked = 0
    for spec in CATALOG:
        for M in (4, 8, 64, 1024, 8192):
            s = sample_grid(spec, M, rule).samples
            h = M // 2
            for k in range(1, h):
                checked += 1
                if s[h + k] != -np.exp(1j * (2.0 * np.pi * k / M)) * s[h - k]:
                    mismatches += 1
    ok = mismatches == 0
    record_acceptance("4 symmetry invariant", ok, f"{mismatches} bitwise mismatches in {checked} pairs")
    assert ok


def test_5_cross_path_agreement():
    # M = 8192 so the |x|^{3/2} kink aliasing (~3e-8 at M = 1024) is below 1e-8
    worst = {}
    for spec in CATALOG:
        fast = legendre_transform(spec, 16, 8192).values
        slow = sine_form_transform(spec, 16, 256).values
        worst[spec.label] = float(np.max(np.abs(fast - slow)))
    label = max(worst, key=worst.get)
    ok = worst[label] <= 1e-8
    record_acceptance("5 cross-path agreement", ok, f"max {worst[label]:.2e} ({label})")
    assert ok


def test_6_complexity():
    # Timings on a shared machine are bimodal, so the ratios use the median of
    # 21 runs; the oracle is too slow for that and is timed by run_bench.
    spec, rule = FunctionSpec("exp"), gauss_legendre(64)
    t = [median_time(lambda: legendre_transform(spec, N, 4 * N, rule), repeats=21, warmup=2)[0] for N in (1024, 4096, 16384)]
    ratios = [b / a for a, b in zip(t, t[1:])]
    speedup = run_bench(spec, [16384], repeats=3, M_for=lambda N: 4 * N).rows[0].speedup
    ok = all(r <= 5.5 for r in ratios) and speedup > 20
    detail = "ratios " + ", ".join(f"{r:.2f}" for r in ratios) + f"; speedup at 16384 {speedup:.1f}x"
    record_acceptance("6 complexity", ok, detail)
    assert ok


def test_7_dirichlet_murphy():
    rule = gauss_legendre(64)
    err = imag = 0.0
    for x in (0.5, 1.0, 2.0):
        for n in range(21):
            value = dirichlet_murphy_p(n, x, rule)
            err = max(err, abs(value.real - legendre_p(n, np.cos(x))))
            imag = max(imag, abs(value.imag))
    ok = err <= 1e-9 and imag <= 1e-9
    record_acceptance("7 Dirichlet-Murphy", ok, f"max error {err:.2e}, max imaginary {imag:.2e}")
    assert ok


def test_8_round_trip():
    c = legendre_transform(FunctionSpec("exp"), 32, 4096, gauss_legendre(48)).values
    x = np.linspace(-1, 1, 101)
    err = float(np.max(np.abs(clenshaw_eval(c, x) - np.exp(x))))
    ok = err <= 1e-12
    record_acceptance("8 round trip", ok, f"max error {err:.2e}")
    assert ok
