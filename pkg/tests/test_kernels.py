import math

import mpmath as mp
import numpy as np
import pytest

import reference_values as ref
from marcum import kernels
from marcum.kernels import (
    GammaPair,
    bessel_i_scaled_exp,
    bessel_i_scaled_uniform,
    bessel_ratio_sequence,
    debye_u,
    gamma_ratio_step,
    gamma_ratios,
    hankel_a,
)
from marcum.result import Status
from oracle import bessel_i, gamma_p, gamma_q


def rel(a, b):
    return abs(a - b) / abs(b)


# -- erfc --------------------------------------------------------------------


def test_erfc_values():
    assert kernels.erfc(0.0) == 1.0
    assert kernels.erfc(-0.7) + kernels.erfc(0.7) == pytest.approx(2.0, rel=1e-16)
    assert rel(kernels.erfc(1.0), ref.ERFC_1) < 1e-15


def test_erfcx_matches_mpmath():
    for z in (-3.0, -0.5, 0.0, 0.3, 1.0, 5.0, 25.9, 26.1, 100.0, 1e4):
        with mp.workdps(40):
            want = float(mp.exp(mp.mpf(z) ** 2) * mp.erfc(z))
        assert rel(kernels.erfcx(z), want) < 2e-15


def test_erfcx_monotone_on_grid():
    vals = [kernels.erfcx(z) for z in np.linspace(0.0, 10.0, 2001)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_log1pmx_small_and_large():
    for s in (1e-12, 1e-5, -0.3, 0.49, 0.7, -0.9, 5.0):
        with mp.workdps(40):
            want = float(mp.log1p(s) - s)
        assert rel(kernels.log1pmx(s), want) < 1e-14


# -- gamma ratios ------------------------------------------------------------


@pytest.mark.parametrize("y", [0.1, 1.0, 7.5, 40.0])
def test_gamma_ratio_order_one_is_exponential(y):
    assert rel(gamma_ratios(1.0, y).q, math.exp(-y)) < 1e-15


def test_gamma_ratio_special_cases():
    g = gamma_ratios(3.0, 0.0)
    assert (g.p, g.q) == (0.0, 1.0)
    assert rel(gamma_ratios(2.5, 3.0).p, ref.GAMMA_P_2P5_3) < 1e-14


@pytest.mark.parametrize("nu,y", [(-1.0, 1.0), (1.0, -1.0), (0.0, 0.0)])
def test_gamma_ratio_domain(nu, y):
    with pytest.raises(ValueError):
        gamma_ratios(nu, y)


def test_gamma_ratio_grid_accuracy_and_complement():
    grid = np.linspace(0.5, 50.0, 12)
    for nu in grid:
        for y in grid:
            g = gamma_ratios(nu, y)
            assert abs(g.p + g.q - 1.0) <= 2e-15
            small_is_p = g.p < g.q
            want = float(gamma_p(nu, y) if small_is_p else gamma_q(nu, y))
            # relative condition number of the small tail is about
            # |nu log(y/nu)| + y, so a unit roundoff in nu alone costs that many ulps
            cond = abs(nu * math.log(y / nu)) + y
            assert rel(g.p if small_is_p else g.q, want) < 1e-14 + 2.2e-16 * cond


def test_gamma_ratio_large_order_tails():
    for nu, y in ((500.0, 300.0), (500.0, 800.0), (5000.0, 4000.0), (20.0, 1e-3)):
        g = gamma_ratios(nu, y)
        small = min(g.p, g.q)
        want = float(gamma_p(nu, y) if g.p < g.q else gamma_q(nu, y))
        assert rel(small, want) < 1e-12


def test_gamma_step_forward_closed_form():
    y = 2.7
    q2 = gamma_ratio_step(gamma_ratios(1.0, y), "forward").q
    assert rel(q2, math.exp(-y) * (1.0 + y)) < 1e-15


def test_gamma_step_round_trip():
    g = gamma_ratios(3.3, 7.0)
    back = gamma_ratio_step(gamma_ratio_step(g, "forward"), "backward")
    assert back.nu == 3.3
    assert abs(back.p - g.p) <= 2 * math.ulp(g.p)
    assert abs(back.q - g.q) <= 2 * math.ulp(g.q)


def test_gamma_step_chain():
    g = gamma_ratios(1.5, 10.0)
    for _ in range(10):
        g = gamma_ratio_step(g)
    want = gamma_ratios(11.5, 10.0)
    assert g.nu == 11.5
    assert rel(g.p, want.p) < 1e-13 and rel(g.q, want.q) < 1e-13


def test_gamma_step_flags_underflow():
    pair = GammaPair(1.0, 0.0, 2.0, 5000.0)
    assert gamma_ratio_step(pair).status is Status.UNDERFLOW_CLAMPED
    with pytest.raises(ValueError):
        gamma_ratio_step(pair, "sideways")


# -- Bessel ratios -----------------------------------------------------------


def test_bessel_ratio_small_argument():
    xi = 1e-8
    r, status = bessel_ratio_sequence(3.0, xi, 1)
    assert status is Status.OK
    assert rel(r[0], xi / 6.0) < 1e-12


def test_bessel_ratio_monotone_in_order():
    r, _ = bessel_ratio_sequence(2.0, 8.0, 6)
    assert all(0.0 < b < a < 1.0 for a, b in zip(r, r[1:]))


def test_bessel_ratio_value():
    r, _ = bessel_ratio_sequence(1.0, 2.0, 1)
    assert rel(r[0], ref.BESSEL_R1_2) < 1e-14


@pytest.mark.parametrize("xi", [1.0, 10.0, 100.0])
def test_bessel_ratio_recurrence(xi):
    # I_{nu-1} - I_{nu+1} = (2 nu / xi) I_nu  <=>  1/r_nu - r_{nu+1} = 2 nu / xi
    r, _ = bessel_ratio_sequence(1.0, xi, 21)
    for nu in range(1, 21):
        lhs = 1.0 / r[nu - 1] - r[nu]
        assert rel(lhs, 2.0 * nu / xi) < 1e-13


def test_bessel_ratio_against_oracle():
    for mu, xi in ((1.5, 31.0), (40.0, 240.0), (134.0, 500.0)):
        r, _ = bessel_ratio_sequence(mu, xi, 1)
        want = float(bessel_i(mu, xi) / bessel_i(mu - 1, xi))
        assert rel(r[0], want) < 1e-14


# -- scaled Bessel functions ---------------------------------------------------


def test_debye_polynomials():
    assert debye_u(0, 0.37) == 1.0
    assert debye_u(1, 0.5) == pytest.approx(7.0 / 192.0, rel=1e-15)
    t = 0.6
    assert debye_u(2, t) == pytest.approx((81 * t**2 - 462 * t**4 + 385 * t**6) / 1152, rel=1e-14)


def test_uniform_value():
    b = bessel_i_scaled_uniform(200.0, 1.0)
    assert b.status is Status.OK
    assert b.scaled_value > 0.0
    assert rel(b.scaled_value, ref.UNIFORM_SCALED_I200) < 1e-14
    assert b.eta == pytest.approx(math.sqrt(2.0) - math.log(1.0 + math.sqrt(2.0)), rel=1e-15)


def test_uniform_flags_poor_convergence():
    # order 1 is far too small for the large-order expansion
    assert bessel_i_scaled_uniform(1.0, 0.1).status is Status.DEGRADED_ACCURACY
    with pytest.raises(ValueError):
        bessel_i_scaled_uniform(200.0, 1.0, kmax=10_000)


def test_hankel_coefficients():
    assert hankel_a(0, 3.7) == 1.0
    assert hankel_a(1, 0.5) == 0.0
    # the expansion terminates at mu = 1/2; exp(-2t) lies below rounding for t > 20
    for t in (31.0, 40.0):
        b = bessel_i_scaled_exp(0.5, t)
        assert rel(b.scaled_value, (1.0 - math.exp(-2.0 * t)) / math.sqrt(2.0 * math.pi * t)) < 1e-15


def test_exp_scaled_value():
    b = bessel_i_scaled_exp(2.0, 40.0)
    assert b.status is Status.OK
    assert rel(b.scaled_value, ref.EXP_SCALED_I2_40) < 1e-14


def test_exp_scaled_flags_poor_convergence():
    assert bessel_i_scaled_exp(30.0, 31.0).status is Status.DEGRADED_ACCURACY


@pytest.mark.parametrize("mu", [135.0, 200.0, 300.0])
def test_scaled_forms_agree(mu):
    # the large-argument form needs mu**2 < 2 t; compare both with the oracle
    t = mu * mu
    a = bessel_i_scaled_exp(mu, t)
    b = bessel_i_scaled_uniform(mu, t / mu)
    with mp.workdps(50):
        want_exp = float(mp.exp(-t) * bessel_i(mu, t))
        z = mp.mpf(t) / mu
        w = mp.sqrt(1 + z * z)
        eta = w + mp.log(z / (1 + w))
        want_uni = float(mp.exp(-mu * eta) * bessel_i(mu, t))
        shift = float(mp.exp(mu * eta - t))
    assert a.status is Status.OK and b.status is Status.OK
    assert rel(a.scaled_value, want_exp) < 1e-12
    assert rel(b.scaled_value, want_uni) < 1e-12
    assert rel(b.scaled_value * shift, a.scaled_value) < 1e-12


def test_eta_below_argument():
    for z in (1e-3, 0.5, 1.0, 10.0, 1e3):
        assert kernels.eta(z) < z
    assert kernels.eta(1e8) == pytest.approx(1e8, rel=1e-15)
