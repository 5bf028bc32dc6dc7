"""Acceptance criteria, one test per criterion.

Each test prints ``criterion N: PASS|FAIL <detail>`` on the terminal even
when pytest captures output.  Run this file directly for the report alone:

    python tests/test_acceptance.py
"""

import math
import sys
import time

import mpmath as mp
import numpy as np
import pytest

import seams
from marcum import marcum, marcum_tilde
from marcum import asymp_large_mu as lm
from marcum.cli import TABLE_61, TABLE_MU, TABLE_Y, run_selftest, selftest_threshold
from marcum.result import Status
from oracle import gamma_q, marcum_pq

TABLE_TOL = 5e-11
ORACLE_TOL = 1e-13
SEAM_TOL = 1e-11
SEAM_PAIRS = 100
PROP_TOL = 1e-12
SHIFT_TOL = 1e-12
SELFTEST_N = 100_000
SELFTEST_BOXES = (200.0, 1000.0, 10000.0)


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


def rel(a, b):
    return abs(a - b) / abs(b)


def test_criterion_1_table(report):
    t0 = time.perf_counter()
    worst = 0.0
    for ratio, q_ref, p_ref in TABLE_61:
        r = marcum(TABLE_MU, ratio * TABLE_MU, TABLE_Y)
        worst = max(worst, rel(r.q, q_ref), rel(r.p, p_ref))
    dt = time.perf_counter() - t0
    report(1, worst <= TABLE_TOL and dt < 1.0, f"max rel dev {worst:.2e} (tol {TABLE_TOL:.0e}), {dt:.3f} s")


def test_criterion_2_fixtures(report):
    t0 = time.perf_counter()
    a = marcum_tilde(1, 40, 20)
    b = marcum_tilde(1, 31, 20)
    c = marcum(800, 0.4, 810)
    dt = time.perf_counter() - t0
    ok_a = f"{a.p:.5e}" == "1.94499e-89"
    ok_b = abs(b.q - 1.0) <= 1e-14
    ok_c = abs(c.q - 0.3632) < 1e-4
    report(
        2,
        ok_a and ok_b and ok_c and dt < 0.1,
        f"P~1(40,20)={a.p:.5e} Q~1(31,20)={b.q!r} Q800(0.4,810)={c.q:.6f}, {dt * 1e3:.1f} ms",
    )


@pytest.mark.parametrize("bound", SELFTEST_BOXES)
def test_criterion_3_recurrence(report, bound):
    t0 = time.perf_counter()
    rep = run_selftest(bound, SELFTEST_N, 1)
    dt = time.perf_counter() - t0
    thr = selftest_threshold(bound)
    report(
        3,
        rep["passed"] and dt < 300.0,
        f"A={bound:g} N={SELFTEST_N} max residual {rep['max_residual']:.2e} (tol {thr:.0e}), "
        f"{rep['evaluated']} evaluated, {rep['clamped_count']} skipped, {dt:.1f} s",
    )


def test_criterion_4_oracle(report):
    rng = np.random.default_rng(2024)
    t0 = time.perf_counter()
    worst, where = 0.0, None
    for _ in range(1000):
        x = rng.uniform(0.1, 30.0)
        y = rng.uniform(0.1, 60.0)
        mu = rng.uniform(1.0, 50.0)
        p_ref, q_ref = marcum_pq(mu, x, y, dps=50)
        r = marcum(mu, x, y)
        if y < x + mu:
            err = float(abs(r.p - p_ref) / p_ref)
        else:
            err = float(abs(r.q - q_ref) / q_ref)
        if err > worst:
            worst, where = err, (mu, x, y)
    dt = time.perf_counter() - t0
    report(
        4,
        worst <= ORACLE_TOL and dt < 600.0,
        f"1000 points, max rel err {worst:.2e} at (mu,x,y)={where} (tol {ORACLE_TOL:.0e}), {dt:.1f} s",
    )


def test_criterion_5_seams(report):
    t0 = time.perf_counter()
    gaps = {name: seams.worst_gap(name, count=SEAM_PAIRS, seed=5) for name in seams.BOUNDARIES}
    dt = time.perf_counter() - t0
    detail = " ".join(f"{k}:{v:.1e}" for k, v in gaps.items())
    report(5, max(gaps.values()) <= SEAM_TOL, f"{SEAM_PAIRS} pairs each, {detail}, {dt:.1f} s")


def _monotone(vals, increasing=True):
    if not increasing:
        vals = vals[::-1]
    return all(b >= a - PROP_TOL * max(abs(a), abs(b)) for a, b in zip(vals, vals[1:]))


def test_criterion_6_properties(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    failures = []

    # complementarity by construction and across the two large-mu expansions
    pts = rng.uniform([1, 0, 0], [1000, 2000, 2000], size=(1000, 3))
    if any(marcum(*p).p + marcum(*p).q != 1.0 for p in pts.tolist()):
        failures.append("p+q")
    cross = 0.0
    for _ in range(1000):
        mu = rng.uniform(135, 1000)
        x = rng.uniform(30, 1000)
        f1, f2 = lm.band_bounds(x, mu)
        y = rng.uniform(f1, f2)
        cross = max(cross, abs(lm.p_large_mu(x, y, mu).p + lm.q_large_mu(x, y, mu).q - 1.0))
    if cross > PROP_TOL:
        failures.append(f"cross {cross:.1e}")

    # monotonicity on 1000-point grids through the routing boundaries
    for mu, y in ((5.0, 40.0), (150.0, 180.0)):
        if not _monotone([marcum(mu, x, y).q for x in np.linspace(10, 50, 1000)]):
            failures.append(f"x-grid mu={mu}")
    for mu, x in ((50.0, 200.0), (300.0, 500.0)):
        f1, f2 = lm.band_bounds(x, mu)
        ys = np.linspace(f1 - 0.3 * (f2 - f1), f2 + 0.3 * (f2 - f1), 1000)
        if not _monotone([marcum(mu, x, y).q for y in ys], increasing=False):
            failures.append(f"y-grid mu={mu}")
    for x, y in ((300.0, 430.0), (1000.0, 1130.0)):
        if not _monotone([marcum(mu, x, y).q for mu in np.linspace(100, 170, 1000)]):
            failures.append(f"mu-grid x={x}")

    # special values
    if any(marcum(mu, x, 0.0).q != 1.0 for mu, x in ((1, 0), (7.5, 3), (300, 500))):
        failures.append("Q(x,0)")
    for mu, y in ((1.0, 2.0), (4.5, 10.0), (60.0, 40.0)):
        r = marcum(mu, 0.0, y)
        want = float(gamma_q(mu, y))
        if rel(min(r.p, r.q), min(want, 1 - want)) > ORACLE_TOL:
            failures.append(f"Q(0,y) mu={mu}")
    r = marcum(5.0, 3.0, 1e4)
    if not (r.q == 0.0 and r.status is Status.UNDERFLOW_CLAMPED):
        failures.append("Q(x,1e4)")
    dt = time.perf_counter() - t0
    report(6, not failures, f"complement cross-check {cross:.1e}, failures {failures or 'none'}, {dt:.1f} s")


def test_criterion_7_shift(report):
    rng = np.random.default_rng(7)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        mu = rng.uniform(135, 1000)
        x = rng.uniform(30, 1000)
        f1, f2 = lm.band_bounds(x, mu)
        y = rng.uniform(max(f1, 0.0), f2)
        diff = lm.q_large_mu(x, y, mu + 1).q - lm.q_large_mu(x, y, mu).q
        with mp.workdps(40):
            xm, ym = mp.mpf(x), mp.mpf(y)
            exact = (ym / xm) ** (mp.mpf(mu) / 2) * mp.exp(-xm - ym) * mp.besseli(mu, 2 * mp.sqrt(xm * ym))
        worst = max(worst, abs(diff - float(exact)))
    dt = time.perf_counter() - t0
    report(7, worst <= SHIFT_TOL, f"1000 band points, max |dQ - shift| {worst:.2e} (tol {SHIFT_TOL:.0e}), {dt:.1f} s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider", "-o", "addopts="]))
