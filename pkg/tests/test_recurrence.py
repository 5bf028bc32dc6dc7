import math

import mpmath as mp
import numpy as np
import pytest

import reference_values as ref
from marcum import asymp_large_mu, asymp_large_xi, kernels, recurrence, series
from marcum.dispatcher import recurrence_residual
from marcum.result import Method, Status


def rel(a, b):
    return abs(a - b) / abs(b)


def test_seed_invariants():
    for mu in (1.0, 1.7, 40.25, 134.9):
        ms = recurrence.seed_order(mu)
        assert 1.0 <= ms < 2.0
        assert (mu - ms) == pytest.approx(round(mu - ms), abs=1e-12)
    s = recurrence.make_seed(100.0, 140.0, 40.25)
    assert s.mu_seed == 1.25 and s.steps == 39
    assert 0.0 < s.q_lo <= s.q_hi < 1.0


def test_zero_steps_equals_seed():
    a = recurrence.q_by_forward_ttrr(100.0, 140.0, 1.3)
    b = asymp_large_xi.large_xi(100.0, 140.0, 1.3)
    assert a.q == b.q


def test_reference_point():
    r = recurrence.q_by_forward_ttrr(100.0, 140.0, 40.0)
    assert r.method is Method.RECURRENCE and r.status is Status.OK
    _, q_ref = ref.MARCUM[(40.0, 100.0, 140.0)]
    assert rel(r.q, q_ref) < 1e-13


def test_each_step_matches_first_order_difference():
    x, y = 100.0, 140.0
    prev = recurrence.q_by_forward_ttrr(x, y, 1.0).q
    for nu in range(1, 45):
        cur = recurrence.q_by_forward_ttrr(x, y, nu + 1.0).q
        with mp.workdps(40):
            d = float(mp.power(mp.mpf(y) / x, mp.mpf(nu) / 2) * mp.exp(-x - y)
                      * mp.besseli(nu, 2 * mp.sqrt(mp.mpf(x) * y)))
        assert abs((cur - prev) - d) <= 1e-12 * max(cur, d)
        prev = cur


def test_textbook_recursion_agrees():
    x, y, mu = 100.0, 140.0, 30.5
    seed = recurrence.make_seed(x, y, mu)
    seq = recurrence.q_sequence(x, y, seed, seed.steps + 1)
    assert rel(seq[-1], recurrence.q_by_forward_ttrr(x, y, mu).q) < 1e-12


def test_coefficients_at_zero_x():
    cs, status = recurrence.coefficients(0.0, 5.0, 2.0, 3)
    assert status is Status.OK
    assert cs == [5.0 / 2.0, 5.0 / 3.0, 5.0 / 4.0]


def test_forward_stability():
    x, y, mu = 300.0, 400.0, 100.0
    ms = recurrence.seed_order(mu)
    seed = asymp_large_xi.large_xi(x, y, ms).q
    q0, _ = kernels.ttrr_q(x, y, mu, ms, seed)
    q1, _ = kernels.ttrr_q(x, y, mu, ms, seed * (1 + 1e-13))
    assert rel(q1, q0) <= 1e-12


def test_p_ratio_against_series():
    r = recurrence.p_ratio_cf(10.0, 12.0, 3.0)
    direct = series.series_p(10.0, 12.0, 3.0).p / series.series_p(10.0, 12.0, 2.0).p
    assert rel(r, direct) < 1e-12
    assert rel(r, ref.P_RATIO_10_12_3) < 1e-12


def test_p_ratio_at_most_one():
    rng = np.random.default_rng(4)
    for _ in range(50):
        x, y, mu = rng.uniform(0.1, 200), rng.uniform(0.1, 200), rng.uniform(1, 100)
        # both P values may round to one, so equality is allowed
        assert 0.0 < recurrence.p_ratio_cf(x, y, mu) <= 1.0
    assert recurrence.p_ratio_cf(10.0, 12.0, 3.0) < 1.0


def test_p_ratio_small_x_limit():
    y, mu = 7.0, 4.0
    want = kernels.gamma_ratios(mu, y).p / kernels.gamma_ratios(mu - 1, y).p
    assert rel(recurrence.p_ratio_cf(0.0, y, mu), want) < 1e-13
    assert rel(recurrence.p_ratio_cf(1e-10, y, mu), want) < 1e-9


def test_p_ratio_domain():
    with pytest.raises(ValueError):
        recurrence.p_ratio_cf(1.0, 0.0, 2.0)


def test_backward_cross_check_from_large_mu():
    # P is minimal: carry it down from order 135 with the continued fraction
    x, y = 400.0, 520.0
    p = asymp_large_mu.p_large_mu(x, y, 135.0).p
    for mu in (135.0, 134.0, 133.0):
        p /= recurrence.p_ratio_cf(x, y, mu)
    assert rel(p, recurrence.q_by_forward_ttrr(x, y, 132.0).p) < 1e-11


def test_difference_formula():
    x, y, nu = 200.0, 230.0, 3.0
    with mp.workdps(40):
        want = float(mp.power(mp.mpf(y) / x, nu / 2) * mp.exp(-x - y)
                     * mp.besseli(nu, 2 * mp.sqrt(mp.mpf(x) * y)))
    assert rel(recurrence.difference(x, y, nu), want) < 1e-13


def test_residual_in_band():
    rng = np.random.default_rng(8)
    worst, done = 0.0, 0
    while done < 10_000:
        mu = rng.uniform(3, 134)
        x = rng.uniform(30, 2000)
        f1, f2 = asymp_large_mu.band_bounds(x, mu)
        y = rng.uniform(f1, f2)
        worst = max(worst, recurrence_residual(mu, x, y))
        done += 1
    assert worst <= 1e-12
