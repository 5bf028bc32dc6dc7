import math

import numpy as np
import pytest

import reference_values as ref
from marcum import kernels, quadrature, series
from marcum.asymp_large_mu import band_bounds
from marcum.cli import TABLE_61, TABLE_MU, TABLE_Y
from marcum.result import Method, Status


def rel(a, b):
    return abs(a - b) / abs(b)


FRAMES = [
    quadrature.Integrand.from_unscaled(5.0, 60.0, 40.0),
    quadrature.Integrand.from_unscaled(60.0, 40.0, 5.0),
    quadrature.Integrand.from_unscaled(81.92, 8601.6, 8192.0),
]


@pytest.mark.parametrize("frame", FRAMES)
def test_psi_shape(frame):
    psi0, _, status = quadrature.integrand_eval(frame, 0.0)
    assert psi0 == 0.0 and status is Status.OK
    for th in np.linspace(1e-3, math.pi * (1 - 1e-9), 200):
        psi, f, _ = quadrature.integrand_eval(frame, th)
        assert psi < 0.0 and math.isfinite(f)
        psi_m, f_m, _ = quadrature.integrand_eval(frame, -th)
        assert (psi_m, f_m) == (psi, f)
    psi_end, _, _ = quadrature.integrand_eval(frame, math.pi * (1 - 1e-12))
    assert psi_end < -20.0


@pytest.mark.parametrize("frame", FRAMES)
def test_f_limit_at_origin(frame):
    r0 = quadrature.r_of_theta(frame, 0.0)
    assert r0 == pytest.approx((1 + math.sqrt(1 + frame.xi_s**2)) / (2 * frame.ys), rel=1e-15)
    want = r0 / (1 - r0)
    for th in (1e-2, 1e-4, 1e-6):
        _, f, _ = quadrature.integrand_eval(frame, th)
        assert f == pytest.approx(want, rel=10 * th)
    _, f0, _ = quadrature.integrand_eval(frame, 0.0)
    assert f0 == pytest.approx(want, rel=1e-13)


def test_small_theta_branch_continuity():
    frame = FRAMES[0]
    below = quadrature.integrand_eval(frame, math.nextafter(0.5, 0.0))
    above = quadrature.integrand_eval(frame, 0.5)
    assert below[0] == pytest.approx(above[0], rel=1e-14)
    assert below[1] == pytest.approx(above[1], rel=1e-14)


def test_pole_detection():
    frame = quadrature.Integrand.from_unscaled(100.0, 300.0, 200.0)
    assert quadrature.integrand_eval(frame, 0.0)[2] is Status.INTERNAL_FAILURE
    r = quadrature.quad_primary(100.0, 300.0, 200.0)
    assert r.status is Status.INTERNAL_FAILURE and math.isnan(r.q)


@pytest.mark.parametrize("row", [0, 9])
def test_table_rows(row):
    ratio, q_ref, p_ref = TABLE_61[row]
    r = quadrature.quad_primary(ratio * TABLE_MU, TABLE_Y, TABLE_MU)
    assert r.method is Method.QUADRATURE and r.status is Status.OK
    assert rel(r.q, q_ref) < 5e-11 and rel(r.p, p_ref) < 5e-11


def test_reference_point_and_orientation():
    p_ref, q_ref = ref.MARCUM[(5.0, 60.0, 40.0)]
    r = quadrature.quad_primary(60.0, 40.0, 5.0)  # y < x + mu: P side
    assert rel(r.p, p_ref) < 1e-13
    p_ref, q_ref = ref.MARCUM[(2.0, 5.0, 30.0)]
    r = quadrature.quad_primary(5.0, 30.0, 2.0)  # y > x + mu: Q side
    assert rel(r.q, q_ref) < 1e-13


def test_far_tail_fixture():
    # tilde Q_1(31, 20), that is Q_1(480.5, 200)
    r = quadrature.quad_primary(480.5, 200.0, 1.0)
    assert abs(r.q - 1.0) <= 1e-14


def test_self_convergence():
    for x, y, mu in ((5.0, 60.0, 40.0), (60.0, 40.0, 5.0), (81.92, 8601.6, 8192.0), (900.0, 300.0, 700.0)):
        lv, nodes, ok, _ = kernels.quad_log(x, y, mu, quadrature.CUT, quadrature.RTOL, quadrature.MAX_NODES)
        assert ok
        lv2, _, _, _ = kernels.quad_log(x, y, mu, quadrature.CUT, 0.0, 2 * nodes)
        assert abs(math.expm1(lv2 - lv)) <= 1e-13


def test_doubled_half_range_equals_full_range():
    frame = FRAMES[0]
    xi2, rho0, ys2, delta0 = frame.params()
    mu = frame.mu
    n = 64
    h = math.pi / n

    def g(th):
        psi, f = kernels.quad_integrand(abs(th), xi2, rho0, ys2, delta0)
        return math.exp(mu * psi) * f

    full = sum(g(k * h) for k in range(-n + 1, n)) * h
    half = (g(0.0) + 2 * sum(g(k * h) for k in range(1, n))) * h
    assert abs(full - half) <= 2 * math.ulp(full)


def test_agrees_with_series_outside_band():
    rng = np.random.default_rng(17)
    worst, done = 0.0, 0
    while done < 200:
        x, mu = rng.uniform(0.5, 29.5), rng.uniform(1, 200)
        f1, f2 = band_bounds(x, mu)
        y = f2 + rng.uniform(0.01, 3) * (f2 - f1) if rng.random() < 0.5 else f1 - rng.uniform(0.01, 1) * max(f1, 0)
        if not y > 0 or f1 < y < f2:
            continue
        a, b = quadrature.quad_primary(x, y, mu), series.series(x, y, mu)
        pa, pb = (a.p, b.p) if y < x + mu else (a.q, b.q)
        if pb < 1e-280:
            continue
        worst = max(worst, rel(pa, pb))
        done += 1
    assert worst <= 1e-12


def test_domain():
    with pytest.raises(ValueError):
        quadrature.quad_primary(1.0, 0.0, 2.0)
