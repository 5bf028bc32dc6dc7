"""The compiled and pure-Python kernels must agree."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from marcum import _pykernels as py
from marcum.asymp_large_mu import band_bounds

ck = pytest.importorskip("marcum._ckernels")

TOL = 1e-13


def close(a, b, tol=TOL):
    if isinstance(a, tuple):
        return len(a) == len(b) and all(close(u, v, tol) for u, v in zip(a, b))
    if isinstance(a, bool) or isinstance(a, int):
        return a == b
    if math.isnan(a) or math.isnan(b):
        return math.isnan(a) and math.isnan(b)
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= tol * max(abs(a), abs(b), 1.0 if tol > 1 else 1e-300)


def both(name, *args, tol=TOL):
    a, b = getattr(py, name)(*args), getattr(ck, name)(*args)
    a = tuple(a) if isinstance(a, (tuple, list)) else a
    b = tuple(b) if isinstance(b, (tuple, list)) else b
    assert close(a, b, tol), (name, args, a, b)


@pytest.fixture
def rng():
    return np.random.default_rng(12)


def test_elementary(rng):
    for z in rng.uniform(-5, 60, 200):
        both("erfcx", float(z))
    assert py.erfcx(-30.0) == ck.erfcx(-30.0) == math.inf
    for s in rng.uniform(-0.99, 5, 200):
        both("log1pmx", float(s))
    for z in rng.uniform(1e-3, 1e3, 100):
        assert close(py.eta(float(z)), ck.eta(float(z)))


def test_gamma(rng):
    for _ in range(300):
        nu, y = float(rng.uniform(0.5, 2000)), float(rng.uniform(0.01, 2500))
        both("log_gamma_prefactor", nu, y)
        both("gamma_log_ratios", nu, y)
    for _ in range(50):
        a = float(rng.uniform(0.5, 50))
        z = float(rng.uniform(a + 1, 200))
        both("upper_gamma_cf", a, z)


def test_series(rng):
    for _ in range(200):
        x, y, mu = float(rng.uniform(0.01, 30)), float(rng.uniform(0.01, 200)), float(rng.uniform(1, 200))
        n0, ne, it, ok = py.truncation_index(x, y, mu, 1e-16)
        assert (n0, ne, it, ok) == tuple(ck.truncation_index(x, y, mu, 1e-16))
        both("series_p_log", x, y, mu, n0)
        both("series_q_log", x, y, mu, n0, 1e-16)


def test_large_xi(rng):
    for _ in range(200):
        x = float(rng.uniform(30, 3000))
        y = float(rng.uniform(1, 3000))
        mu = float(rng.uniform(1, math.sqrt(4 * math.sqrt(x * y))))
        for want_p in (True, False):
            both("large_xi_log", x, y, mu, want_p)
    for _ in range(50):
        xi, sigma = float(rng.uniform(31, 500)), float(rng.uniform(0, 0.5))
        both("phi_hat", xi, sigma, 30)


def test_bessel(rng):
    for _ in range(200):
        nu, xi = float(rng.uniform(0.5, 300)), float(rng.uniform(0.01, 2000))
        both("bessel_ratio_cf", nu, xi)
        both("bessel_uniform_scaled", nu, xi / nu)
    for _ in range(100):
        mu = float(rng.uniform(0.5, 20))
        both("bessel_exp_scaled", mu, float(rng.uniform(mu * mu, 2000)))


def test_recurrence(rng):
    for _ in range(100):
        mu = float(rng.uniform(2, 134))
        x = float(rng.uniform(30, 2000))
        f1, f2 = band_bounds(x, mu)
        y = float(rng.uniform(max(f1, 1), f2))
        ms = 1.0 + mu - math.floor(mu)
        both("ttrr_q", x, y, mu, ms, 0.3, tol=1e-12)


def test_large_mu(rng):
    for _ in range(200):
        mu = float(rng.uniform(135, 1e4))
        x = float(rng.uniform(30, 1e4))
        f1, f2 = band_bounds(x, mu)
        y = float(rng.uniform(max(f1, 1), f2))
        both("half_zeta_sq", x, y, mu)
        for want_p in (True, False):
            both("large_mu_terms", x, y, mu, want_p)


def test_quadrature(rng):
    for _ in range(100):
        mu = float(rng.uniform(1, 2000))
        x = float(rng.uniform(30, 3000))
        y = float(rng.uniform(1, 4000))
        params = py.quad_params(x, y, mu)
        assert close(tuple(params), tuple(ck.quad_params(x, y, mu)))
        for th in rng.uniform(0, math.pi, 5):
            both("quad_integrand", float(th), *params)
        both("quad_log", x, y, mu, 45.0, 1e-15, 4096, tol=1e-12)


def _batch(backend, text):
    env = dict(os.environ, MARCUM_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-m", "marcum", "batch", "-"],
        input=text, capture_output=True, text=True, env=env, check=True,
    )
    return proc.stdout.splitlines()


def test_end_to_end():
    rng = np.random.default_rng(30)
    pts = rng.uniform([1, 0, 0], [1000, 1000, 1000], size=(300, 3))
    text = "".join(f"{m!r} {x!r} {y!r}\n" for m, x, y in pts.tolist())
    a, b = _batch("python", text), _batch("cython", text)
    assert len(a) == len(b) == 300
    for la, lb in zip(a, b):
        fa, fb = la.split(), lb.split()
        assert fa[5:] == fb[5:]
        for u, v in zip(map(float, fa[3:5]), map(float, fb[3:5])):
            assert close(u, v, 1e-12)
