import math

import numpy as np
import pytest

import reference_values as ref
from marcum import kernels, series
from marcum.result import Method, Status
from oracle import marcum_pq


def rel(a, b):
    return abs(a - b) / abs(b)


def test_bound_function_minimum():
    x, y, mu = 20.0, 40.0, 5.0
    plan = series.truncation_index(x, y, mu)
    assert plan.n_e == pytest.approx((-mu + math.sqrt(mu * mu + 4 * x * y)) / 2, rel=1e-14)
    h = 1e-4
    slope = (series.bound_function(plan.n_e + h, x, y, mu, 1e-15)
             - series.bound_function(plan.n_e - h, x, y, mu, 1e-15)) / (2 * h)
    assert abs(slope) < 1e-6


def test_truncation_index_matches_scan():
    plan = series.truncation_index(20.0, 40.0, 5.0)
    assert plan.status is Status.OK
    assert plan.n0 == ref.N0_20_40_5
    assert series.bound_function(plan.n0 + 1, 20.0, 40.0, 5.0, plan.eps) >= 0.0


def test_truncation_index_small_x():
    assert series.truncation_index(1e-12, 5.0, 3.0).n0 <= 2


def test_truncation_index_domain():
    with pytest.raises(ValueError):
        series.truncation_index(0.0, 1.0, 2.0)


def test_special_values():
    r = series.series_p(4.0, 0.0, 3.0)
    assert (r.p, r.q) == (0.0, 1.0)
    g = kernels.gamma_ratios(3.5, 7.0)
    assert rel(series.series_p(0.0, 7.0, 3.5).p, g.p) < 1e-15
    assert rel(series.series_q(0.0, 7.0, 3.5).q, g.q) < 1e-15


def test_underflow_clamp():
    r = series.series_q(1.0, 1e4, 1.0)
    assert r.q == 0.0 and r.p == 1.0
    assert r.status is Status.UNDERFLOW_CLAMPED


def test_fixture_large_order():
    r = series.series_p(0.4, 810.0, 800.0)
    assert r.method is Method.SERIES
    assert abs(r.q - 0.3632) < 1e-4
    assert rel(r.q, ref.Q_800_04_810) < 1e-13


def test_reference_points():
    p_ref, _ = ref.MARCUM[(5.0, 10.0, 25.0)]
    assert rel(series.series_p(10.0, 25.0, 5.0).p, p_ref) < 1e-14
    _, q_ref = ref.MARCUM[(2.0, 5.0, 30.0)]
    assert rel(series.series_q(5.0, 30.0, 2.0).q, q_ref) < 1e-14


def test_first_term_normalized():
    # with n0 = 0 the sum is its first term, exp(-x) P_mu(y)
    x, y, mu = 1e-3, 2.0, 3.0
    lv = kernels.series_p_log(x, y, mu, 0)
    lp, _ = kernels.gamma_log_ratios(mu, y)
    assert lv == pytest.approx(-x + lp, rel=1e-15)


def test_truncation_soundness():
    rng = np.random.default_rng(11)
    for _ in range(200):
        x, y, mu = rng.uniform(0.1, 30), rng.uniform(0.1, 60), rng.uniform(1, 50)
        if y >= x + mu:
            continue
        n0 = series.truncation_index(x, y, mu).n0
        a = kernels.series_p_log(x, y, mu, n0)
        b = kernels.series_p_log(x, y, mu, n0 + 10)
        assert abs(math.expm1(a - b)) <= 1e-15 + 4e-16 * abs(a)


@pytest.mark.parametrize("seed", [1, 2])
def test_against_oracle(seed):
    rng = np.random.default_rng(seed)
    for _ in range(20):
        x, y, mu = rng.uniform(0.1, 30), rng.uniform(0.1, 60), rng.uniform(1, 50)
        r = series.series(x, y, mu)
        p, q = marcum_pq(mu, x, y)
        if y < x + mu:
            assert rel(r.p, float(p)) < 1e-13
        else:
            assert rel(r.q, float(q)) < 1e-13
