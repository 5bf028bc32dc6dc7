import math

import mpmath as mp
import numpy as np
import pytest

import reference_values as ref
import seams
from marcum import marcum, marcum_tilde, recurrence_residual, select_method
from marcum.asymp_large_mu import band_bounds
from marcum.result import UNDERFLOW, Method, Status
from oracle import gamma_q, marcum_pq


def rel(a, b):
    return abs(a - b) / abs(b)


# -- documented examples -------------------------------------------------------


def test_zero_threshold():
    r = marcum(2, 10, 0)
    assert (r.p, r.q, r.method, r.status) == (0.0, 1.0, Method.SERIES, Status.OK)


def test_table_middle_row():
    r = marcum(8192, 409.6, 8601.6)
    assert r.method is Method.LARGE_MU
    assert rel(r.q, 0.498535453743169) < 5e-11


def test_tilde_fixtures():
    r = marcum_tilde(1, 40, 20)
    assert r.method is Method.LARGE_XI and f"{r.p:.5e}" == "1.94499e-89"
    r = marcum_tilde(1, 31, 20)
    assert r.method is Method.LARGE_XI and abs(r.q - 1.0) <= 1e-14
    r = marcum_tilde(2, 0, 0)
    assert r.q == 1.0 and r.p == 0.0


def test_high_order_small_x_fixture():
    r = marcum(800, 0.4, 810)
    assert r.method is Method.SERIES
    assert abs(r.q - 0.3632) < 1e-4
    assert rel(r.q, ref.Q_800_04_810) < 1e-13


def test_tilde_matches_direct():
    for m, a, b in ((3.0, 2.0, 4.0), (50.0, 12.0, 11.0), (1.0, 40.0, 20.0)):
        assert marcum_tilde(m, a, b) == marcum(m, a * a / 2, b * b / 2)


# -- validation ----------------------------------------------------------------


@pytest.mark.parametrize(
    "args",
    [(0.5, 1, 1), (1, -1, 1), (1, 1, -1), (math.nan, 1, 1), (1, math.inf, 1), ("a", 1, 1), (None, 1, 1)],
)
def test_invalid_input(args):
    r = marcum(*args)
    assert r.status is Status.INVALID_INPUT and r.method is None
    assert math.isnan(r.p) and math.isnan(r.q)


def test_invalid_tilde():
    assert marcum_tilde(1, -1, 2).status is Status.INVALID_INPUT
    assert marcum_tilde(0.5, 1, 2).status is Status.INVALID_INPUT


def test_large_order_is_flagged():
    r = marcum(2e4, 100.0, 2e4)
    assert r.status is Status.DEGRADED_ACCURACY
    assert 0.0 < r.q < 1.0 and r.p + r.q == 1.0


# -- routing -------------------------------------------------------------------


def test_region_partition():
    rng = np.random.default_rng(2)
    seen = set()
    for _ in range(5000):
        mu = rng.uniform(1, 500)
        x = rng.uniform(0, 1000)
        y = rng.uniform(0, 1500)
        m = select_method(mu, x, y)
        xi = 2 * math.sqrt(x * y)
        f1, f2 = band_bounds(x, mu)
        preds = [
            x < 30,
            x >= 30 and xi > 30 and mu * mu < 2 * xi,
            x >= 30 and not (xi > 30 and mu * mu < 2 * xi) and f1 < y < f2 and mu < 135,
            x >= 30 and not (xi > 30 and mu * mu < 2 * xi) and f1 < y < f2 and mu >= 135,
        ]
        preds.append(not any(preds))
        assert sum(preds) == 1
        order = [Method.SERIES, Method.LARGE_XI, Method.RECURRENCE, Method.LARGE_MU, Method.QUADRATURE]
        assert m is order[preds.index(True)]
        seen.add(m)
    assert seen == set(Method)


def test_band_edges_go_to_quadrature():
    x, mu = 400.0, 200.0
    f1, f2 = band_bounds(x, mu)
    assert select_method(mu, x, f1) is Method.QUADRATURE
    assert select_method(mu, x, f2) is Method.QUADRATURE


@pytest.mark.parametrize("name", sorted(seams.BOUNDARIES))
def test_seam_continuity(name):
    assert seams.worst_gap(name, count=30, seed=11) <= 1e-11


# -- special values and monotonicity ---------------------------------------------


def test_special_values():
    for mu, x in ((1.0, 0.0), (7.5, 3.0), (300.0, 500.0)):
        assert marcum(mu, x, 0.0).q == 1.0
    for mu, y in ((1.0, 2.0), (4.5, 10.0), (60.0, 40.0)):
        r = marcum(mu, 0.0, y)
        want = float(gamma_q(mu, y))
        small = min(r.q, r.p)
        assert rel(r.q, want) < 1e-13 or rel(small, min(want, 1 - want)) < 1e-13
    r = marcum(5.0, 3.0, 1e4)
    assert r.status is Status.UNDERFLOW_CLAMPED and r.q == 0.0 and r.p == 1.0


def test_top_clamp_complement():
    r = marcum(3.0, 2000.0, 100.0)
    assert r.p == 0.0 and r.q == 1.0


def _nondecreasing(vals, tol=1e-12):
    return all(b >= a - tol * max(abs(a), 1e-300) for a, b in zip(vals, vals[1:]))


def test_monotone_in_x_across_series_boundary():
    for mu, y in ((5.0, 40.0), (20.0, 60.0), (150.0, 180.0)):
        qs = [marcum(mu, x, y).q for x in np.linspace(20, 40, 201)]
        assert _nondecreasing(qs)


def test_monotone_in_y_across_band():
    for mu, x in ((50.0, 200.0), (300.0, 500.0)):
        f1, f2 = band_bounds(x, mu)
        ys = np.linspace(f1 - 0.2 * (f2 - f1), f2 + 0.2 * (f2 - f1), 301)
        qs = [marcum(mu, x, y).q for y in ys]
        assert _nondecreasing(qs[::-1])


def test_monotone_in_mu_across_135():
    for x, y in ((300.0, 430.0), (100.0, 240.0)):
        qs = [marcum(mu, x, y).q for mu in np.linspace(120, 150, 121)]
        assert _nondecreasing(qs)


# -- recurrence residual -------------------------------------------------------------


def test_residual_baseline():
    # 1.11e-16 when first pinned against the oracle
    assert recurrence_residual(50.0, 100.0, 150.0) <= 1e-15


def test_residual_is_identity_for_exact_values():
    with mp.workdps(60):
        for mu, x, y in ((50, 100, 150), (5, 10, 25), (3, 1, 20)):
            use_p = y < x + mu
            f = [marcum_pq(mu + k, x, y)[0 if use_p else 1] for k in (-1, 0, 1, 2)]
            fm1, f0, f1, f2 = f
            if x < mu:
                ratio = (y + mu) * f0 / (x * f2 + (mu - x) * f1 + y * fm1)
            else:
                ratio = ((x - mu) * f1 + (y + mu) * f0) / (x * f2 + y * fm1)
            assert abs(ratio - 1) <= mp.mpf("1e-30")


def test_residual_sentinel():
    assert math.isnan(recurrence_residual(5.0, 3.0, 1e4))
    assert math.isnan(recurrence_residual(5.0, 10.0, 25.0, min_value=0.5))
    assert recurrence_residual(5.0, 10.0, 25.0) < 1e-13


def test_underflow_constant():
    assert UNDERFLOW == 1e-290
