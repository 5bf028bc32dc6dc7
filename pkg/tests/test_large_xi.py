import math

import pytest

import reference_values as ref
from marcum import asymp_large_xi as lx
from marcum import kernels
from marcum.result import Method, Status


def rel(a, b):
    return abs(a - b) / abs(b)


def test_frame_identities():
    x, y = 123.4, 567.8
    f = lx.LargeXiFrame.from_xy(x, y)
    assert f.sigma * f.xi == pytest.approx((math.sqrt(y) - math.sqrt(x)) ** 2, rel=1e-14)
    assert f.rho**2 * x == pytest.approx(y, rel=1e-15)


def test_phi_zero_sigma():
    f = lx.LargeXiFrame.from_xy(50.0, 50.0)
    phis, status = lx.phi_sequence(f, 4)
    assert status is Status.OK
    assert math.isinf(phis[0])
    assert phis[1] == pytest.approx(2.0 / math.sqrt(f.xi), rel=1e-15)


def test_phi_zero_value():
    f = lx.LargeXiFrame.from_xy(100.0, 196.0)
    phis, _ = lx.phi_sequence(f, 3)
    assert phis[0] == pytest.approx(math.sqrt(math.pi / f.sigma) * math.erfc(4.0), rel=1e-14)
    assert rel(phis[0], ref.PHI0_100_196) < 1e-14


@pytest.mark.parametrize("x,y", [(100.0, 196.0), (40.0, 900.0), (300.0, 310.0), (2000.0, 30.0)])
def test_phi_recursion_identity(x, y):
    # (n - 1/2) Phi_n = -sigma Phi_{n-1} + exp(-sigma xi) xi^(1/2 - n), checked
    # on the exp(sigma xi)-scaled values so nothing underflows
    f = lx.LargeXiFrame.from_xy(x, y)
    phis = kernels.phi_hat(f.xi, f.sigma, lx.NMAX)
    for n in range(1, len(phis)):
        lhs = (n - 0.5) * phis[n] + f.sigma * phis[n - 1]
        assert lhs == pytest.approx(f.xi ** (0.5 - n), rel=1e-12)
        assert phis[n] > 0.0


def test_fixture_tiny_p():
    r = lx.p_large_xi(800.0, 200.0, 1.0)
    assert r.method is Method.LARGE_XI
    assert f"{r.p:.5e}" == "1.94499e-89"


def test_reference_points():
    _, q_ref = ref.MARCUM[(3.0, 150.0, 350.0)]
    assert rel(lx.q_large_xi(150.0, 350.0, 3.0).q, q_ref) < 1e-13
    p_ref, _ = ref.MARCUM[(3.0, 350.0, 150.0)]
    assert rel(lx.p_large_xi(350.0, 150.0, 3.0).p, p_ref) < 1e-13


def test_limits():
    assert lx.q_large_xi(100.0, 1e4, 2.0).q == 0.0
    assert lx.p_large_xi(1e4, 100.0, 2.0).p == 0.0


def test_domain_checks():
    with pytest.raises(ValueError):
        lx.q_large_xi(200.0, 100.0, 2.0)
    with pytest.raises(ValueError):
        lx.p_large_xi(100.0, 200.0, 2.0)


@pytest.mark.parametrize("x,mu", [(60.0, 1.0), (200.0, 3.5), (1000.0, 7.0)])
def test_continuity_across_diagonal(x, mu):
    below = lx.large_xi(x, x * (1 - 1e-8), mu)
    at = lx.large_xi(x, x, mu)
    above = lx.large_xi(x, x * (1 + 1e-8), mu)
    for r in (below, above):
        assert rel(r.q, at.q) <= 1e-6
    assert math.isfinite(at.q) and at.status is Status.OK


def test_agrees_with_series_on_overlap():
    from marcum import series

    for x, y, mu in ((29.0, 9.0, 3.0), (25.0, 12.0, 5.0), (29.9, 12.0, 6.0), (20.0, 15.0, 4.5)):
        xi = 2 * math.sqrt(x * y)
        assert 30.0 < xi <= 40.0 and mu * mu < 2 * xi
        a, b = lx.large_xi(x, y, mu), series.series(x, y, mu)
        small = min(b.p, b.q)
        assert rel(min(a.p, a.q), small) < 1e-12


def test_kernel_term_count_bounded():
    _, n, ok = kernels.large_xi_log(150.0, 350.0, 3.0, False)
    assert ok and 1 <= n <= lx.NMAX
