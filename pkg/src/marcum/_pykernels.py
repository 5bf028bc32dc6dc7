"""Scalar numerical kernels (pure-Python build).

Every function here has a typed twin in ``_ckernels.pyx`` with the same
signature and return convention; ``marcum.kernels`` picks one of the two at
import time.  Functions return plain floats or tuples of floats/ints so both
builds stay interchangeable.

Conventions
-----------
* ``d(nu, y) = y**nu * exp(-y) / Gamma(nu + 1)`` is the gamma "step" term.
* Results that may under/overflow are returned as natural logarithms.
"""

import math

from ._coeffs import F_COEFFS, KMAX, THETA_SIN, U_COEFFS

SQRT_PI = 1.7724538509055160273
SQRT_2PI = 2.5066282746310005024
LN_2PI = 1.8378770664093454836
TINY = 1e-300
CF_TOL = 1e-15
CF_MAXIT = 10000
XI_NMAX = 30
RESCALE = 1e200

_UNIFORM_KMAX = len(U_COEFFS) - 1

# coefficient rows grouped by diagonal k = j + l of f_{j,l}
_DIAG = tuple(
    tuple((j, F_COEFFS[(j, k - j)]) for j in range(k + 1)) for k in range(KMAX + 1)
)


# ---------------------------------------------------------------------------
# elementary helpers


def _poly(coeffs, t):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def erfcx(z):
    """Scaled complementary error function ``exp(z*z) * erfc(z)``."""
    if z < 0.0:
        if z < -26.6:
            return math.inf
        return 2.0 * math.exp(z * z) - erfcx(-z)
    if z < 26.0:
        # exact square split so that exp(z*z) carries no rounding of z*z
        c = 134217729.0 * z
        hi = c - (c - z)
        lo = z - hi
        zz = z * z
        err = ((hi * hi - zz) + 2.0 * hi * lo) + lo * lo
        return math.exp(zz) * math.exp(err) * math.erfc(z)
    w = 0.5 / (z * z)
    term = 1.0
    total = 1.0
    k = 1
    while k < 40:
        term *= -(2 * k - 1) * w
        total += term
        if abs(term) < 1e-17:
            break
        k += 1
    return total / (z * SQRT_PI)


def log1pmx(s):
    """``log(1 + s) - s`` without cancellation near zero."""
    if abs(s) < 0.5:
        r = s / (2.0 + s)
        r2 = r * r
        acc = 0.0
        term = r * r2
        k = 3
        while True:
            acc += term / k
            term *= r2
            if abs(term) < 1e-18 * max(abs(acc), 1e-300):
                break
            k += 2
        return 2.0 * acc - s * r
    return math.log1p(s) - s


def log_gamma_star(nu):
    """``log(Gamma(nu)) - ((nu - 1/2) log nu - nu + log(2 pi)/2)`` for nu >= 10."""
    r = 1.0 / nu
    r2 = r * r
    return r * (
        1.0 / 12
        - r2
        * (
            1.0 / 360
            - r2
            * (
                1.0 / 1260
                - r2 * (1.0 / 1680 - r2 * (1.0 / 1188 - r2 * (691.0 / 360360 - r2 / 156.0)))
            )
        )
    )


def log_gamma_prefactor(nu, y):
    """``log(y**nu * exp(-y) / Gamma(nu + 1))`` for nu >= 0, y > 0."""
    if nu < 10.0:
        return nu * math.log(y) - y - math.lgamma(nu + 1.0)
    t = (y - nu) / nu
    if abs(t) < 0.5:
        body = nu * log1pmx(t)
    else:
        body = nu * (math.log(y) - math.log(nu)) - (y - nu)
    return body - 0.5 * (LN_2PI + math.log(nu)) - log_gamma_star(nu)


def _taylor_s(nu, y):
    """``sum_k y**k / (nu + 1)_k`` (converges for any y, used when y < nu + 1)."""
    total = 1.0
    term = 1.0
    k = 1.0
    while True:
        term *= y / (nu + k)
        total += term
        if term < 1e-17 * total:
            return total
        k += 1.0


def _legendre_cf(nu, y):
    """Continued fraction with ``Q_nu(y) = d(nu, y) * nu * cf`` for y >= nu + 1."""
    b = y + 1.0 - nu
    c = 1.0 / TINY
    d = 1.0 / b
    h = d
    i = 1
    while i < CF_MAXIT:
        an = -i * (i - nu)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < CF_TOL:
            break
        i += 1
    return h


def gamma_log_ratios(nu, y):
    """Return ``(log P_nu(y), log Q_nu(y))`` of the regularized gamma ratios."""
    if y <= 0.0:
        return -math.inf, 0.0
    if nu <= 0.0:
        return 0.0, -math.inf
    logd = log_gamma_prefactor(nu, y)
    if y < nu + 1.0:
        lp = logd + math.log(_taylor_s(nu, y))
        p = math.exp(lp)
        return lp, (math.log1p(-p) if p < 1.0 else -math.inf)
    lq = logd + math.log(nu * _legendre_cf(nu, y))
    q = math.exp(lq)
    return (math.log1p(-q) if q < 1.0 else -math.inf), lq


# ---------------------------------------------------------------------------
# incomplete-gamma series


def truncation_index(x, y, mu, eps):
    """Newton solution of the truncation equation.

    Returns ``(n0, n_e, iterations, ok)``.
    """
    xy = x * y
    lxy = math.log(x) + math.log(y)  # x * y may underflow
    cst = math.lgamma(mu) - math.log(2.0 * math.pi * eps) + mu
    ne = 2.0 * xy / (mu + math.sqrt(mu * mu + 4.0 * xy))

    def f(n):
        v = (n + mu) * math.log(n + mu) - 2.0 * n - n * lxy - cst
        if n > 0.0:
            v += n * math.log(n)
        return v

    if f(ne) > 0.0:
        return max(1, int(math.ceil(ne))), ne, 0, 1
    n = max(2.0 * ne, ne + 1.0)
    it = 0
    while f(n) <= 0.0:
        n *= 2.0
        it += 1
        if it > 200:
            return 0, ne, it, 0
    while it < 200:
        step = f(n) / (math.log(n + mu) + math.log(n) - lxy)
        n -= step
        it += 1
        if abs(step) < 1e-9 * n:
            return max(1, int(math.ceil(n))), ne, it, 1
    return max(1, int(math.ceil(n))), ne, it, 0


def series_p_log(x, y, mu, n0):
    """``log P_mu(x, y)`` from the gamma-ratio series truncated after n0 terms.

    Runs the stable backward recursion on ``S_n = P_{mu+n}(y) / d(mu+n, y)``
    and nests the Poisson weights Horner-style, so no intermediate can
    overflow.
    """
    top = mu + n0
    lp, _ = gamma_log_ratios(top, y)
    s = math.exp(lp - log_gamma_prefactor(top, y))
    acc = 1.0
    for n in range(n0, 0, -1):
        t = s * y / (mu + n)
        s = 1.0 + t
        acc = 1.0 + acc * (t / s) * x / n
    return -x + math.log(s) + log_gamma_prefactor(mu, y) + math.log(acc)


def series_q_log(x, y, mu, n0, eps):
    """``log Q_mu(x, y)`` from the forward gamma-ratio series.

    Returns ``(log_q, n_terms)``.  Summation stops past ``n0`` once the terms
    are decreasing and below ``eps`` relative to the sum.
    """
    logd = log_gamma_prefactor(mu, y)
    _, lq = gamma_log_ratios(mu, y)
    u = math.exp(lq - logd)  # w_n * Q_{mu+n} / d(mu, y), rescaled
    v = 1.0  # w_n * d(mu+n, y) / d(mu, y), same scale
    total = u
    shift = 0.0
    n = 0
    nmax = n0 + 100000
    while n < nmax:
        fac = x / (n + 1)
        unew = fac * (u + v)
        v *= fac * y / (mu + n + 1)
        total += unew
        n += 1
        if n >= n0 and unew <= u and unew < eps * total:
            break
        u = unew
        if total > RESCALE or v > RESCALE:
            sc = max(total, v)
            total /= sc
            u /= sc
            v /= sc
            shift += math.log(sc)
    return -x + logd + shift + math.log(total), n


# ---------------------------------------------------------------------------
# large-xi expansion


def upper_gamma_cf(a, z):
    """``exp(z) * z**(-a) * Gamma(a, z)`` by continued fraction (z >= 1)."""
    b = z + 1.0 - a
    c = 1.0 / TINY
    d = 1.0 / b
    h = d
    i = 1
    while i < CF_MAXIT:
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < CF_TOL:
            break
        i += 1
    return h


def phi_hat(xi, sigma, nmax):
    """``exp(sigma*xi) * Phi_n`` for n = 0..nmax as a list.

    Entry 0 is ``inf`` when sigma == 0 (the integral diverges there).
    """
    z = sigma * xi
    out = [0.0] * (nmax + 1)
    if sigma == 0.0:
        out[0] = math.inf
        for n in range(1, nmax + 1):
            out[n] = xi ** (0.5 - n) / (n - 0.5)
        return out
    out[0] = math.sqrt(math.pi / sigma) * erfcx(math.sqrt(z))
    if z < 1.0:
        for n in range(1, nmax + 1):
            out[n] = (xi ** (0.5 - n) - sigma * out[n - 1]) / (n - 0.5)
        return out
    n0 = min(int(z), nmax)
    out[n0] = xi ** (0.5 - n0) * upper_gamma_cf(0.5 - n0, z)
    for n in range(n0, 1, -1):
        out[n - 1] = (xi ** (0.5 - n) - (n - 0.5) * out[n]) / sigma
    for n in range(n0 + 1, nmax + 1):
        out[n] = (xi ** (0.5 - n) - sigma * out[n - 1]) / (n - 0.5)
    return out


def large_xi_log(x, y, mu, want_p):
    """Large-xi expansion of ``log Q`` (y >= x) or ``log P`` (y < x).

    Returns ``(log_value, n_terms, converged)``.
    """
    sx = math.sqrt(x)
    sy = math.sqrt(y)
    xi = 2.0 * sx * sy
    dd = (y - x) / (sx + sy)
    z = dd * dd
    sigma = z / xi
    rho = sy / sx
    lnrho = 0.5 * math.log(y / x)
    ph = phi_hat(xi, sigma, XI_NMAX)
    if want_p:
        lead = 0.5 * erfcx(-dd) / math.sqrt(rho)
    else:
        lead = SQRT_PI * math.sqrt(xi / y) * erfcx(dd) / (2.0 * SQRT_2PI)
    m1 = 4.0 * (mu - 1.0) ** 2
    m2 = 4.0 * mu * mu
    alo = 1.0
    ahi = 1.0
    total = 0.0
    prev = math.inf
    converged = 0
    nterms = 0
    tol = 1e-17 * abs(lead)
    for n in range(1, XI_NMAX + 1):
        k = (2 * n - 1) ** 2
        alo *= (m1 - k) / (8.0 * n)
        ahi *= (m2 - k) / (8.0 * n)
        size = (abs(alo) + abs(ahi) / rho) * ph[n] / (2.0 * SQRT_2PI)
        if size > prev:
            break
        term = (alo - ahi / rho) * ph[n] / (2.0 * SQRT_2PI)
        total += -term if n % 2 else term
        nterms = n
        if size <= tol:
            converged = 1
            break
        prev = size
    bracket = lead - total if want_p else lead + total
    if bracket <= 0.0:
        return -math.inf, nterms, 0
    return mu * lnrho - z + math.log(bracket), nterms, converged


# ---------------------------------------------------------------------------
# modified Bessel functions


def bessel_ratio_cf(nu, xi):
    """``I_nu(xi) / I_{nu-1}(xi)`` by the Gauss continued fraction.

    Returns ``(ratio, converged)``.
    """
    b = 2.0 * nu / xi
    c = 1.0 / TINY
    d = 1.0 / b
    h = d
    i = 1
    while i < CF_MAXIT:
        b += 2.0 / xi
        d = b + d
        if abs(d) < TINY:
            d = TINY
        c = b + 1.0 / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < CF_TOL:
            return h, 1
        i += 1
    return h, 0


def bessel_exp_scaled(mu, t):
    """``exp(-t) I_mu(t)`` by the large-argument expansion.

    Returns ``(value, smallest_term_ratio)``.
    """
    m2 = 4.0 * mu * mu
    a = 1.0
    total = 1.0
    best = math.inf
    for n in range(1, 60):
        a *= -(m2 - (2 * n - 1) ** 2) / (8.0 * n * t)
        mag = abs(a)
        if mag > best:
            break
        total += a
        best = mag
        if mag < 1e-17 * abs(total):
            break
    return total / math.sqrt(2.0 * math.pi * t), best / abs(total)


def bessel_uniform_scaled(mu, z):
    """``exp(-mu*eta(z)) I_mu(mu*z)`` by the uniform large-order expansion.

    Returns ``(value, last_term_ratio)``.
    """
    w = math.sqrt(1.0 + z * z)
    t = 1.0 / w
    total = 1.0
    scale = 1.0
    prev = 1.0
    ratio = 0.0
    for k in range(1, _UNIFORM_KMAX + 1):
        scale /= mu
        term = _poly(U_COEFFS[k], t) * scale
        total += term
        mag = abs(term)
        ratio = mag / prev if prev > 0.0 else 0.0
        if mag < 1e-17 * abs(total):
            break
        prev = mag
    return total / (math.sqrt(2.0 * math.pi * mu * w)), ratio


def eta(z):
    """``sqrt(1 + z**2) + log(z / (1 + sqrt(1 + z**2)))``."""
    w = math.sqrt(1.0 + z * z)
    return w + math.log(z / (1.0 + w))


def ttrr_q(x, y, mu, mu_seed, q_seed):
    """Carry ``Q`` from order ``mu_seed`` up to ``mu`` by exact differences.

    ``D_nu = Q_{nu+1} - Q_nu`` satisfies ``D_nu = c_nu D_{nu-1}`` with
    ``c_nu = sqrt(y/x) I_nu(xi) / I_{nu-1}(xi)``, which is the first-order
    form of the homogeneous three-term recurrence.  Returns ``(q, ok)``.
    """
    steps = int(round(mu - mu_seed))
    if steps <= 0:
        return q_seed, 1
    sx = math.sqrt(x)
    sy = math.sqrt(y)
    xi = 2.0 * sx * sy
    dd = (y - x) / (sx + sy)
    rho = sy / sx
    ib, _ = bessel_exp_scaled(mu_seed, xi)
    dcur = math.exp(mu_seed * 0.5 * math.log(y / x) - dd * dd) * ib
    ok = 1
    ratios = [0.0] * steps
    if steps > 1:
        top = mu_seed + steps - 1
        r, ok = bessel_ratio_cf(top, xi)
        ratios[steps - 1] = r
        for j in range(steps - 2, 0, -1):
            r = 1.0 / (2.0 * (mu_seed + j) / xi + r)
            ratios[j] = r
    total = dcur
    for j in range(1, steps):
        dcur *= rho * ratios[j]
        total += dcur
    return q_seed + total, ok


# ---------------------------------------------------------------------------
# large-mu expansion


def half_zeta_sq(x, y, mu):
    """``zeta**2 / 2`` at the scaled point ``(x/mu, y/mu)``, cancellation free."""
    xs = x / mu
    ys = y / mu
    delta = (y - x - mu) / mu
    dq = math.sqrt(1.0 + 4.0 * xs * ys)
    # dq - 1 = 4 xs ys / (dq + 1) avoids cancellation for small xs ys
    den = 4.0 * xs * ys / (dq + 1.0) + 2.0 * ys
    s = -2.0 * delta / den
    if abs(s) < 0.5:
        a = delta * delta * (dq + 2.0 * ys + 1.0) / ((xs + ys + dq) * den)
        return a + log1pmx(s)
    return xs + ys - dq + math.log((1.0 + dq) / (2.0 * ys))


def large_mu_terms(x, y, mu, want_p):
    """Uniform large-mu expansion at order mu + 1 plus the order shift.

    Returns ``(value_mu_plus_1, shift, n_terms, converged)``; the value at
    order mu is ``value - shift`` for Q and ``value + shift`` for P.
    """
    xs = x / mu
    ys = y / mu
    hz = half_zeta_sq(x, y, mu)
    zeta = math.sqrt(2.0 * hz)
    if y > x + mu:
        zeta = -zeta
    u = 1.0 / math.sqrt(2.0 * xs + 1.0)
    zz = -zeta if want_p else zeta
    ee = math.exp(-mu * hz)
    kmax = KMAX
    psi = [0.0] * (kmax + 1)
    psi[0] = math.sqrt(math.pi / (2.0 * mu)) * math.erfc(-zz * math.sqrt(0.5 * mu))
    if kmax >= 1:
        psi[1] = ee / mu
    pw = 1.0
    for j in range(2, kmax + 1):
        pw *= -zz
        psi[j] = (j - 1) / mu * psi[j - 2] + pw * ee / mu
    lead = 0.5 * math.erfc(-zz * math.sqrt(0.5 * mu))
    pref = math.sqrt(mu / (2.0 * math.pi))
    u2 = u * u
    upow = [1.0] * (2 * kmax + 1)
    for i in range(1, 2 * kmax + 1):
        upow[i] = upow[i - 1] * u
    minv = [1.0] * (kmax + 1)
    for i in range(1, kmax + 1):
        minv[i] = minv[i - 1] / mu
    total = 0.0
    small = 0
    converged = 0
    nterms = 0
    for k in range(1, kmax + 1):
        bk = 0.0
        for j, coeffs in _DIAG[k]:
            fjk = upow[2 * k - j] * _poly(coeffs, u2)
            c = fjk * psi[j] * minv[k - j]
            if want_p and j % 2:
                c = -c
            bk += c
        term = pref * bk
        total += term
        nterms = k
        if abs(term) < 1e-17 * abs(lead + total):
            small += 1
            if small == 2:
                converged = 1
                break
        else:
            small = 0
    xis = 2.0 * math.sqrt(xs * ys)
    ib, _ = bessel_uniform_scaled(mu, xis)
    return lead + total, ee * ib, nterms, converged


# ---------------------------------------------------------------------------
# quadrature


def _theta_terms(theta):
    """``(g - 1, g', sin(theta), sin(theta/2)**2)`` with ``g = theta/sin(theta)``."""
    st = math.sin(theta)
    h = math.sin(0.5 * theta)
    if theta < 0.5:
        t2 = theta * theta
        gm1 = 0.0
        dg = 0.0
        for i in range(len(THETA_SIN) - 1, 0, -1):
            gm1 = gm1 * t2 + THETA_SIN[i]
            dg = dg * t2 + 2 * i * THETA_SIN[i]
        gm1 *= t2
        dg *= theta
    else:
        g = theta / st
        gm1 = g - 1.0
        dg = (st - theta * math.cos(theta)) / (st * st)
    return gm1, dg, st, h * h


def quad_params(x, y, mu):
    """Integrand parameters ``(xi_s**2, rho0, 2*ys, delta0)``."""
    xs = x / mu
    ys = y / mu
    xi2 = 4.0 * xs * ys
    rho0 = math.sqrt(1.0 + xi2)
    delta0 = 4.0 * ys * ((x - y + mu) / mu) / (xi2 / (rho0 + 1.0) + 2.0 * ys)
    return xi2, rho0, 2.0 * ys, delta0


def quad_integrand(theta, xi2, rho0, ys2, delta0):
    """Return ``(psi(theta), f(theta))`` for 0 <= theta < pi."""
    gm1, dg, st, s2 = _theta_terms(theta)
    g = 1.0 + gm1
    rho = math.sqrt(g * g + xi2)
    drho = gm1 * (g + 1.0) / (rho + rho0)
    psi = -2.0 * s2 * rho + drho - math.log1p((gm1 + drho) / (1.0 + rho0))
    # with r = 1 + a / ys2, numerator and denominator are divided by r**2
    # (w = (r - 1) / r, v = 1 / r) so nothing overflows as ys -> 0
    a = gm1 + drho + delta0
    b = ys2 + a
    w = a / b
    v = ys2 / b
    num = st * dg * v / rho - w - 2.0 * s2 * v
    den = w * w + 4.0 * s2 * v
    if den == 0.0:
        # on the pole; match IEEE division in the compiled build
        return psi, (math.copysign(math.inf, num) if num else math.nan)
    return psi, num / den


def quad_psi(theta, xi2, rho0):
    gm1, _, _, s2 = _theta_terms(theta)
    g = 1.0 + gm1
    rho = math.sqrt(g * g + xi2)
    drho = gm1 * (g + 1.0) / (rho + rho0)
    return -2.0 * s2 * rho + drho - math.log1p((gm1 + drho) / (1.0 + rho0))


def quad_log(x, y, mu, cut, rtol, nmax):
    """Trapezoidal evaluation of the primary function.

    Returns ``(log_value, nodes, converged, pole)``: the integral is taken
    over ``[0, theta_max]`` where ``mu * psi(theta_max) = -cut``.
    """
    xi2, rho0, ys2, delta0 = quad_params(x, y, mu)
    pole = 1 if abs(delta0 / ys2) < 1e-10 else 0
    hi = math.pi
    if mu * quad_psi(math.pi * (1.0 - 1e-12), xi2, rho0) < -cut:
        lo = 0.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if mu * quad_psi(mid, xi2, rho0) < -cut:
                hi = mid
            else:
                lo = mid
            if hi - lo < 1e-6 * hi:
                break
    else:
        hi = math.pi * (1.0 - 1e-12)

    def fun(th):
        p, f = quad_integrand(th, xi2, rho0, ys2, delta0)
        return math.exp(mu * p) * f

    n = 16
    h = hi / n
    s = 0.5 * (fun(0.0) + fun(hi))
    for k in range(1, n):
        s += fun(k * h)
    prev = h * s
    converged = 0
    while n < nmax:
        h *= 0.5
        add = 0.0
        for k in range(1, 2 * n, 2):
            add += fun(k * h)
        s += add
        n *= 2
        cur = h * s
        if abs(cur - prev) <= rtol * abs(cur):
            prev = cur
            converged = 1
            break
        prev = cur
    val = abs(prev) / math.pi
    if val <= 0.0:
        return -math.inf, n, converged, pole
    return -mu * half_zeta_sq(x, y, mu) + math.log(val), n, converged, pole
