import math

import mpmath as mp
import numpy as np
import pytest

import reference_values as ref
from marcum import asymp_large_mu as lm
from marcum import kernels
from marcum.cli import TABLE_61, TABLE_MU, TABLE_Y
from marcum.dispatcher import recurrence_residual
from marcum.result import Method, Status


def rel(a, b):
    return abs(a - b) / abs(b)


def table_row(ratio):
    for r, q, p in TABLE_61:
        if r == ratio:
            return q, p
    raise KeyError(ratio)


# -- zeta ----------------------------------------------------------------------


def test_zeta_on_transition_line():
    for xs in (0.01, 1.0, 7.0):
        assert lm.zeta_of(xs, xs + 1.0) == 0.0


def test_zeta_value():
    assert rel(lm.zeta_of(1.0, 3.0), ref.ZETA_1_3) < 1e-14


def test_zeta_series_first_coefficient():
    for xs in (0.2, 1.0, 4.0):
        c1 = sum(c * xs**i for i, c in enumerate(lm.C_COEFFS[1]))
        assert c1 == pytest.approx(-(3 * xs + 1) / 3, rel=1e-15)
    # two-term series at (1, 2.001) against the exact value
    xs, ys = 1.0, 2.001
    with mp.workdps(40):
        w = mp.sqrt(1 + 4 * mp.mpf(xs) * mp.mpf(ys))
        exact = -float(mp.sqrt(2 * (xs + mp.mpf(ys) - w + mp.log((1 + w) / (2 * mp.mpf(ys))))))
    one = lm.zeta_series(xs, ys, terms=1)
    two = lm.zeta_series(xs, ys, terms=2)
    assert abs(two - exact) < abs(one - exact) / 100


def test_zeta_forms_agree_at_switch():
    for xs in (1e-4, 0.05, 0.5, 3.0, 20.0, 300.0, 1e4):
        w = 2 * xs + 1
        for side in (-1, 1):
            ys = xs + 1 + side * lm.ZETA_SERIES_MAX * w * w / (1 + 4 * xs)
            a = lm.zeta_series(xs, ys)
            b = lm.signed_zeta(xs, ys, 1.0)
            assert abs(a - b) <= 1e-13 * abs(b)


def test_transition_frame_sign_and_half_square():
    for x, y, mu in ((100.0, 250.0, 140.0), (100.0, 260.0, 140.0), (5.0, 300.0, 200.0)):
        f = lm.TransitionFrame.from_unscaled(x, y, mu)
        assert math.copysign(1.0, f.zeta) == math.copysign(1.0, f.xs + 1 - f.ys)
        dq = math.sqrt(1 + 4 * f.xs * f.ys)
        direct = f.xs + f.ys - dq + math.log((1 + dq) / (2 * f.ys))
        assert abs(0.5 * f.zeta**2 - direct) < 1e-13


# -- Psi_j ---------------------------------------------------------------------


def test_psi_low_orders():
    zeta, mu = -0.2, 150.0
    psi = lm.psi_j_sequence(zeta, mu, 4)
    assert psi[1] == pytest.approx(math.exp(-0.5 * mu * zeta * zeta) / mu, rel=1e-15)
    p0 = lm.psi_j_sequence(0.0, mu, 2)
    assert p0[0] == pytest.approx(math.sqrt(math.pi / (2 * mu)), rel=1e-15)
    assert p0[2] == pytest.approx(p0[0] / mu, rel=1e-15)


def test_psi3_value():
    assert rel(lm.psi_j_sequence(0.3, 200.0, 3)[3], ref.PSI3_03_MU200) < 1e-13


def test_psi_even_positive():
    for zeta in (-1.0, -0.1, 0.0, 0.4, 2.0):
        psi = lm.psi_j_sequence(zeta, 300.0, 24)
        assert all(math.isfinite(v) for v in psi)
        assert all(psi[j] > 0.0 for j in range(0, 25, 2))


# -- coefficients ----------------------------------------------------------------

PRINTED_F = {
    (0, 0): lambda u: 1.0,
    (0, 1): lambda u: u**2 * (3 - 5 * u**4) / 24,
    (1, 0): lambda u: u * (3 + u**2) / 6,
    (0, 2): lambda u: u**4 * (81 - 462 * u**4 + 385 * u**8) / 1152,
    (1, 1): lambda u: -u**3 * (9 - 21 * u**2 - 75 * u**4 + 95 * u**6) / 144,
    (2, 0): lambda u: -u**2 * (3 - 5 * u**4) / 24,
    (0, 3): lambda u: u**6 * (30375 - 369603 * u**4 + 765765 * u**8 - 425425 * u**12) / 414720,
    (1, 2): lambda u: -u**5 * (729 - 1053 * u**2 - 9702 * u**4 + 11550 * u**6 + 12705 * u**8
                                - 14245 * u**10) / 6912,
    (2, 1): lambda u: u**4 * (27 - 144 * u**2 - 402 * u**4 + 1440 * u**6 - 925 * u**8) / 576,
    (3, 0): lambda u: u**3 * (135 - 117 * u**2 - 675 * u**4 + 625 * u**6) / 2160,
}


@pytest.mark.parametrize("jk", sorted(PRINTED_F))
def test_f_coefficients_match_printed(jk):
    for u in (0.1, 0.45, 0.8, 1.0):
        assert lm.f_coefficient(*jk, u) == pytest.approx(PRINTED_F[jk](u), rel=1e-13, abs=1e-16)


def test_f20_is_minus_f01():
    for u in (0.3, 0.9):
        assert lm.f_coefficient(2, 0, u) == pytest.approx(-lm.f_coefficient(0, 1, u), rel=1e-15)


def test_saddle_coefficients():
    for xs in (0.01, 0.5, 2.0, 40.0):
        u = 1 / math.sqrt(2 * xs + 1)
        a0, a1 = lm.saddle_coefficients(xs)
        assert a0 == pytest.approx(math.sqrt(1 - u**4) / u**2, rel=1e-13)
        assert a1 == pytest.approx(math.sqrt((1 - u * u) / (1 + u * u)) / u, rel=1e-13)
        assert a1**2 == pytest.approx((2 * xs + 1) * xs / (xs + 1), rel=1e-14)


# -- band ----------------------------------------------------------------------------


def test_band_bounds():
    assert lm.band_bounds(0.0, 2.0, 1.0) == (0.0, 4.0)
    f1, f2 = lm.band_bounds(81.92, 8192.0)
    w = math.sqrt(4 * 81.92 + 2 * 8192.0)
    assert f1 == 81.92 + 8192.0 - w and f2 == 81.92 + 8192.0 + w
    assert f"{f1:.4f} {f2:.4f}" == "8144.6463 8403.1937"
    assert not f1 < TABLE_Y < f2
    for x, mu in ((30.0, 135.0), (500.0, 1000.0)):
        f1, f2 = lm.band_bounds(x, mu)
        assert f1 < x + mu < f2


# -- evaluation ----------------------------------------------------------------------


@pytest.mark.parametrize("ratio", [0.04, 0.05])
def test_table_q(ratio):
    q_ref, _ = table_row(ratio)
    r = lm.q_large_mu(ratio * TABLE_MU, TABLE_Y, TABLE_MU)
    assert r.method is Method.LARGE_MU and r.status is Status.OK
    assert rel(r.q, q_ref) < 5e-11


@pytest.mark.parametrize("ratio", [0.06, 0.07])
def test_table_p(ratio):
    _, p_ref = table_row(ratio)
    r = lm.p_large_mu(ratio * TABLE_MU, TABLE_Y, TABLE_MU)
    assert rel(r.p, p_ref) < 5e-11


def test_on_transition_line():
    mu = 400.0
    r = lm.q_large_mu(100.0, 500.0, mu)
    assert abs(r.q - 0.5) < 2.0 / math.sqrt(mu)


def test_complementarity_of_expansions():
    rng = np.random.default_rng(5)
    for _ in range(100):
        mu = rng.uniform(135, 1000)
        x = rng.uniform(30, 1000)
        zeta_target = rng.uniform(-1, 1) / math.sqrt(mu / 2)
        # y from the near-line linearization y ~ x + mu - zeta sqrt(mu (2x/mu + 1))
        y = x + mu - zeta_target * math.sqrt(mu * (2 * x / mu + 1))
        q = lm.q_large_mu(x, y, mu).q
        p = lm.p_large_mu(x, y, mu).p
        assert abs(p + q - 1.0) <= 1e-12


def test_shift_consistency_sample():
    rng = np.random.default_rng(9)
    for _ in range(100):
        mu = rng.uniform(135, 1000)
        x = rng.uniform(30, 1000)
        f1, f2 = lm.band_bounds(x, mu)
        y = rng.uniform(f1, f2)
        q1 = lm.q_large_mu(x, y, mu + 1).q
        q0 = lm.q_large_mu(x, y, mu).q
        _, shift, _ = lm.order_plus_one(x, y, mu, False)
        assert abs(q1 - q0 - shift) <= 1e-12


def test_residual_in_band():
    rng = np.random.default_rng(21)
    worst = 0.0
    done = 0
    while done < 10_000:
        x, y, mu = rng.uniform(0, 200, 3)
        f1, f2 = lm.band_bounds(x, mu)
        if mu < 136 or x < 30 or not f1 < y < f2:
            continue
        r = recurrence_residual(mu, x, y)
        worst = max(worst, r)
        done += 1
    assert worst <= 3e-13


def test_domain_check():
    with pytest.raises(ValueError):
        lm.q_large_mu(-1.0, 10.0, 200.0)
