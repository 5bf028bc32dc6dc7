# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Scalar numerical kernels (compiled build).

Line-for-line port of ``_pykernels`` with C doubles; see that module for
the conventions.  Both builds are checked against each other in the tests.
"""

from libc.math cimport (INFINITY, ceil, cos, erfc, exp, fabs, floor, lgamma,
                        log, log1p, sin, sqrt)
from libc.stdlib cimport malloc

from ._coeffs import F_COEFFS, KMAX, THETA_SIN, U_COEFFS

cdef double SQRT_PI = 1.7724538509055160273
cdef double SQRT_2PI = 2.5066282746310005024
cdef double LN_2PI = 1.8378770664093454836
cdef double PI = 3.14159265358979323846
cdef double TINY = 1e-300
cdef double CF_TOL = 1e-15
cdef int CF_MAXIT = 10000
cdef int XI_NMAX = 30
cdef double RESCALE = 1e200

# ---------------------------------------------------------------------------
# coefficient tables flattened into C arrays

cdef int _kmax = KMAX
cdef int _ukmax = len(U_COEFFS) - 1
cdef int _ntheta = len(THETA_SIN)
cdef double *_u_data
cdef int *_u_off
cdef int *_u_len
cdef double *_f_data
cdef int *_f_off
cdef int *_f_len
cdef double *_theta


cdef void _load_tables():
    global _u_data, _u_off, _u_len, _f_data, _f_off, _f_len, _theta
    cdef int k, j, i, pos, total
    total = sum(len(c) for c in U_COEFFS)
    _u_data = <double *> malloc(total * sizeof(double))
    _u_off = <int *> malloc((_ukmax + 1) * sizeof(int))
    _u_len = <int *> malloc((_ukmax + 1) * sizeof(int))
    pos = 0
    for k in range(_ukmax + 1):
        _u_off[k] = pos
        _u_len[k] = len(U_COEFFS[k])
        for i in range(_u_len[k]):
            _u_data[pos] = U_COEFFS[k][i]
            pos += 1
    total = sum(len(c) for c in F_COEFFS.values())
    _f_data = <double *> malloc(total * sizeof(double))
    # index (k, j) -> k * (kmax + 1) + j with f_{j, k - j}
    _f_off = <int *> malloc((_kmax + 1) * (_kmax + 1) * sizeof(int))
    _f_len = <int *> malloc((_kmax + 1) * (_kmax + 1) * sizeof(int))
    pos = 0
    for k in range(_kmax + 1):
        for j in range(k + 1):
            c = F_COEFFS[(j, k - j)]
            _f_off[k * (_kmax + 1) + j] = pos
            _f_len[k * (_kmax + 1) + j] = len(c)
            for i in range(len(c)):
                _f_data[pos] = c[i]
                pos += 1
    _theta = <double *> malloc(_ntheta * sizeof(double))
    for i in range(_ntheta):
        _theta[i] = THETA_SIN[i]


_load_tables()


cdef inline double _poly(const double *c, int n, double t) nogil:
    cdef double acc = 0.0
    cdef int i
    for i in range(n - 1, -1, -1):
        acc = acc * t + c[i]
    return acc


# ---------------------------------------------------------------------------
# elementary helpers


cdef double _erfcx(double z) nogil:
    cdef double c, hi, lo, zz, err, w, term, total
    cdef int k
    if z < 0.0:
        return 2.0 * exp(z * z) - _erfcx(-z)
    if z < 26.0:
        c = 134217729.0 * z
        hi = c - (c - z)
        lo = z - hi
        zz = z * z
        err = ((hi * hi - zz) + 2.0 * hi * lo) + lo * lo
        return exp(zz) * exp(err) * erfc(z)
    w = 0.5 / (z * z)
    term = 1.0
    total = 1.0
    k = 1
    while k < 40:
        term *= -(2 * k - 1) * w
        total += term
        if fabs(term) < 1e-17:
            break
        k += 1
    return total / (z * SQRT_PI)


cpdef double erfcx(double z):
    """Scaled complementary error function ``exp(z*z) * erfc(z)``."""
    return _erfcx(z)


cdef double _log1pmx(double s) nogil:
    cdef double r, r2, acc, term, tmp
    cdef int k
    if fabs(s) < 0.5:
        r = s / (2.0 + s)
        r2 = r * r
        acc = 0.0
        term = r * r2
        k = 3
        while True:
            acc += term / k
            term *= r2
            tmp = fabs(acc)
            if tmp < 1e-300:
                tmp = 1e-300
            if fabs(term) < 1e-18 * tmp:
                break
            k += 2
        return 2.0 * acc - s * r
    return log1p(s) - s


cpdef double log1pmx(double s):
    """``log(1 + s) - s`` without cancellation near zero."""
    return _log1pmx(s)


cdef inline double _log_gamma_star(double nu) nogil:
    cdef double r = 1.0 / nu
    cdef double r2 = r * r
    return r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 * (
        1.0 / 1680 - r2 * (1.0 / 1188 - r2 * (691.0 / 360360 - r2 / 156.0))))))


cdef double _log_gamma_prefactor(double nu, double y) nogil:
    cdef double t, body
    if nu < 10.0:
        return nu * log(y) - y - lgamma(nu + 1.0)
    t = (y - nu) / nu
    if fabs(t) < 0.5:
        body = nu * _log1pmx(t)
    else:
        body = nu * (log(y) - log(nu)) - (y - nu)
    return body - 0.5 * (LN_2PI + log(nu)) - _log_gamma_star(nu)


cpdef double log_gamma_prefactor(double nu, double y):
    """``log(y**nu * exp(-y) / Gamma(nu + 1))`` for nu >= 0, y > 0."""
    return _log_gamma_prefactor(nu, y)


cdef double _taylor_s(double nu, double y) nogil:
    cdef double total = 1.0
    cdef double term = 1.0
    cdef double k = 1.0
    while True:
        term *= y / (nu + k)
        total += term
        if term < 1e-17 * total:
            return total
        k += 1.0


cdef double _lentz_gamma(double b, double a0) nogil:
    # 1 / (b - 1(1-a0) / (b + 2 - 2(2-a0) / ...)) for both gamma fractions
    cdef double c = 1.0 / TINY
    cdef double d = 1.0 / b
    cdef double h = d
    cdef double an, delta
    cdef int i = 1
    while i < CF_MAXIT:
        an = -i * (i - a0)
        b += 2.0
        d = an * d + b
        if fabs(d) < TINY:
            d = TINY
        c = b + an / c
        if fabs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < CF_TOL:
            break
        i += 1
    return h


cdef void _gamma_log_ratios(double nu, double y, double *lp, double *lq) nogil:
    cdef double logd, p, q
    if y <= 0.0:
        lp[0] = -INFINITY
        lq[0] = 0.0
        return
    if nu <= 0.0:
        lp[0] = 0.0
        lq[0] = -INFINITY
        return
    logd = _log_gamma_prefactor(nu, y)
    if y < nu + 1.0:
        lp[0] = logd + log(_taylor_s(nu, y))
        p = exp(lp[0])
        lq[0] = log1p(-p) if p < 1.0 else -INFINITY
        return
    lq[0] = logd + log(nu * _lentz_gamma(y + 1.0 - nu, nu))
    q = exp(lq[0])
    lp[0] = log1p(-q) if q < 1.0 else -INFINITY


def gamma_log_ratios(double nu, double y):
    """Return ``(log P_nu(y), log Q_nu(y))`` of the regularized gamma ratios."""
    cdef double lp, lq
    _gamma_log_ratios(nu, y, &lp, &lq)
    return lp, lq


# ---------------------------------------------------------------------------
# incomplete-gamma series


cdef inline double _trunc_f(double n, double mu, double lxy, double cst) nogil:
    cdef double v = (n + mu) * log(n + mu) - 2.0 * n - n * lxy - cst
    if n > 0.0:
        v += n * log(n)
    return v


def truncation_index(double x, double y, double mu, double eps):
    """Newton solution of the truncation equation; ``(n0, n_e, iters, ok)``."""
    cdef double xy = x * y
    cdef double lxy = log(x) + log(y)
    cdef double cst = lgamma(mu) - log(2.0 * PI * eps) + mu
    cdef double ne = 2.0 * xy / (mu + sqrt(mu * mu + 4.0 * xy))
    cdef double n, step
    cdef int it = 0
    cdef int n0
    if _trunc_f(ne, mu, lxy, cst) > 0.0:
        n0 = <int> ceil(ne)
        return (n0 if n0 > 1 else 1), ne, 0, 1
    n = 2.0 * ne if 2.0 * ne > ne + 1.0 else ne + 1.0
    while _trunc_f(n, mu, lxy, cst) <= 0.0:
        n *= 2.0
        it += 1
        if it > 200:
            return 0, ne, it, 0
    while it < 200:
        step = _trunc_f(n, mu, lxy, cst) / (log(n + mu) + log(n) - lxy)
        n -= step
        it += 1
        if fabs(step) < 1e-9 * n:
            n0 = <int> ceil(n)
            return (n0 if n0 > 1 else 1), ne, it, 1
    n0 = <int> ceil(n)
    return (n0 if n0 > 1 else 1), ne, it, 0


cpdef double series_p_log(double x, double y, double mu, int n0):
    """``log P_mu(x, y)`` from the gamma-ratio series truncated after n0 terms."""
    cdef double top = mu + n0
    cdef double lp, lq, s, t, acc
    cdef int n
    _gamma_log_ratios(top, y, &lp, &lq)
    s = exp(lp - _log_gamma_prefactor(top, y))
    acc = 1.0
    for n in range(n0, 0, -1):
        t = s * y / (mu + n)
        s = 1.0 + t
        acc = 1.0 + acc * (t / s) * x / n
    return -x + log(s) + _log_gamma_prefactor(mu, y) + log(acc)


def series_q_log(double x, double y, double mu, int n0, double eps):
    """``log Q_mu(x, y)`` from the forward gamma-ratio series; ``(log_q, n_terms)``."""
    cdef double logd = _log_gamma_prefactor(mu, y)
    cdef double lp, lq, u, v, total, shift, fac, unew, sc
    cdef int n = 0
    cdef int nmax = n0 + 100000
    _gamma_log_ratios(mu, y, &lp, &lq)
    u = exp(lq - logd)
    v = 1.0
    total = u
    shift = 0.0
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
            sc = total if total > v else v
            total /= sc
            u /= sc
            v /= sc
            shift += log(sc)
    return -x + logd + shift + log(total), n


# ---------------------------------------------------------------------------
# large-xi expansion


cpdef double upper_gamma_cf(double a, double z):
    """``exp(z) * z**(-a) * Gamma(a, z)`` by continued fraction (z >= 1)."""
    return _lentz_gamma(z + 1.0 - a, a)


cdef void _phi_hat(double xi, double sigma, int nmax, double *out) nogil:
    cdef double z = sigma * xi
    cdef int n, n0
    if sigma == 0.0:
        out[0] = INFINITY
        for n in range(1, nmax + 1):
            out[n] = xi ** (0.5 - n) / (n - 0.5)
        return
    out[0] = sqrt(PI / sigma) * _erfcx(sqrt(z))
    if z < 1.0:
        for n in range(1, nmax + 1):
            out[n] = (xi ** (0.5 - n) - sigma * out[n - 1]) / (n - 0.5)
        return
    n0 = <int> z
    if n0 > nmax:
        n0 = nmax
    out[n0] = xi ** (0.5 - n0) * _lentz_gamma(z + 1.0 - (0.5 - n0), 0.5 - n0)
    for n in range(n0, 1, -1):
        out[n - 1] = (xi ** (0.5 - n) - (n - 0.5) * out[n]) / sigma
    for n in range(n0 + 1, nmax + 1):
        out[n] = (xi ** (0.5 - n) - sigma * out[n - 1]) / (n - 0.5)


def phi_hat(double xi, double sigma, int nmax):
    """``exp(sigma*xi) * Phi_n`` for n = 0..nmax as a list."""
    cdef double buf[64]
    if nmax > 63:
        raise ValueError("nmax must be <= 63")
    _phi_hat(xi, sigma, nmax, buf)
    return [buf[n] for n in range(nmax + 1)]


def large_xi_log(double x, double y, double mu, bint want_p):
    """Large-xi expansion of ``log Q`` (y >= x) or ``log P`` (y < x).

    Returns ``(log_value, n_terms, converged)``.
    """
    cdef double sx = sqrt(x)
    cdef double sy = sqrt(y)
    cdef double xi = 2.0 * sx * sy
    cdef double dd = (y - x) / (sx + sy)
    cdef double z = dd * dd
    cdef double sigma = z / xi
    cdef double rho = sy / sx
    cdef double lnrho = 0.5 * log(y / x)
    cdef double ph[64]
    cdef double lead, m1, m2, alo, ahi, total, prev, tol, k, size, term, bracket
    cdef int n, nterms = 0, converged = 0
    _phi_hat(xi, sigma, XI_NMAX, ph)
    if want_p:
        lead = 0.5 * _erfcx(-dd) / sqrt(rho)
    else:
        lead = SQRT_PI * sqrt(xi / y) * _erfcx(dd) / (2.0 * SQRT_2PI)
    m1 = 4.0 * (mu - 1.0) * (mu - 1.0)
    m2 = 4.0 * mu * mu
    alo = 1.0
    ahi = 1.0
    total = 0.0
    prev = INFINITY
    tol = 1e-17 * fabs(lead)
    for n in range(1, XI_NMAX + 1):
        k = (2.0 * n - 1.0) * (2.0 * n - 1.0)
        alo *= (m1 - k) / (8.0 * n)
        ahi *= (m2 - k) / (8.0 * n)
        size = (fabs(alo) + fabs(ahi) / rho) * ph[n] / (2.0 * SQRT_2PI)
        if size > prev:
            break
        term = (alo - ahi / rho) * ph[n] / (2.0 * SQRT_2PI)
        if n % 2:
            total -= term
        else:
            total += term
        nterms = n
        if size <= tol:
            converged = 1
            break
        prev = size
    bracket = lead - total if want_p else lead + total
    if bracket <= 0.0:
        return -INFINITY, nterms, 0
    return mu * lnrho - z + log(bracket), nterms, converged


# ---------------------------------------------------------------------------
# modified Bessel functions


cdef double _bessel_ratio_cf(double nu, double xi, int *ok) nogil:
    cdef double b = 2.0 * nu / xi
    cdef double c = 1.0 / TINY
    cdef double d = 1.0 / b
    cdef double h = d
    cdef double delta
    cdef int i = 1
    while i < CF_MAXIT:
        b += 2.0 / xi
        d = b + d
        if fabs(d) < TINY:
            d = TINY
        c = b + 1.0 / c
        if fabs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < CF_TOL:
            ok[0] = 1
            return h
        i += 1
    ok[0] = 0
    return h


def bessel_ratio_cf(double nu, double xi):
    """``I_nu(xi) / I_{nu-1}(xi)`` by the Gauss continued fraction; ``(ratio, ok)``."""
    cdef int ok
    cdef double r = _bessel_ratio_cf(nu, xi, &ok)
    return r, ok


cdef double _bessel_exp_scaled(double mu, double t, double *best_ratio) nogil:
    cdef double m2 = 4.0 * mu * mu
    cdef double a = 1.0
    cdef double total = 1.0
    cdef double best = INFINITY
    cdef double mag
    cdef int n
    for n in range(1, 60):
        a *= -(m2 - (2.0 * n - 1.0) * (2.0 * n - 1.0)) / (8.0 * n * t)
        mag = fabs(a)
        if mag > best:
            break
        total += a
        best = mag
        if mag < 1e-17 * fabs(total):
            break
    best_ratio[0] = best / fabs(total)
    return total / sqrt(2.0 * PI * t)


def bessel_exp_scaled(double mu, double t):
    """``exp(-t) I_mu(t)`` by the large-argument expansion; ``(value, ratio)``."""
    cdef double r
    cdef double v = _bessel_exp_scaled(mu, t, &r)
    return v, r


cdef double _bessel_uniform_scaled(double mu, double z, double *last_ratio) nogil:
    cdef double w = sqrt(1.0 + z * z)
    cdef double t = 1.0 / w
    cdef double total = 1.0
    cdef double scale = 1.0
    cdef double prev = 1.0
    cdef double ratio = 0.0
    cdef double term, mag
    cdef int k
    for k in range(1, _ukmax + 1):
        scale /= mu
        term = _poly(_u_data + _u_off[k], _u_len[k], t) * scale
        total += term
        mag = fabs(term)
        ratio = mag / prev if prev > 0.0 else 0.0
        if mag < 1e-17 * fabs(total):
            break
        prev = mag
    last_ratio[0] = ratio
    return total / sqrt(2.0 * PI * mu * w)


def bessel_uniform_scaled(double mu, double z):
    """``exp(-mu*eta(z)) I_mu(mu*z)`` by the uniform expansion; ``(value, ratio)``."""
    cdef double r
    cdef double v = _bessel_uniform_scaled(mu, z, &r)
    return v, r


cpdef double eta(double z):
    """``sqrt(1 + z**2) + log(z / (1 + sqrt(1 + z**2)))``."""
    cdef double w = sqrt(1.0 + z * z)
    return w + log(z / (1.0 + w))


def ttrr_q(double x, double y, double mu, double mu_seed, double q_seed):
    """Carry ``Q`` from order ``mu_seed`` up to ``mu`` by exact differences; ``(q, ok)``."""
    cdef int steps = <int> floor(mu - mu_seed + 0.5)
    cdef double sx, sy, xi, dd, rho, ib, dcur, r, total, dummy
    cdef double ratios[256]
    cdef int ok = 1
    cdef int j
    if steps <= 0:
        return q_seed, 1
    if steps > 256:
        raise ValueError("too many recursion steps")
    sx = sqrt(x)
    sy = sqrt(y)
    xi = 2.0 * sx * sy
    dd = (y - x) / (sx + sy)
    rho = sy / sx
    ib = _bessel_exp_scaled(mu_seed, xi, &dummy)
    dcur = exp(mu_seed * 0.5 * log(y / x) - dd * dd) * ib
    if steps > 1:
        r = _bessel_ratio_cf(mu_seed + steps - 1, xi, &ok)
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


cdef double _half_zeta_sq(double x, double y, double mu) nogil:
    cdef double xs = x / mu
    cdef double ys = y / mu
    cdef double delta = (y - x - mu) / mu
    cdef double dq = sqrt(1.0 + 4.0 * xs * ys)
    cdef double den = 4.0 * xs * ys / (dq + 1.0) + 2.0 * ys
    cdef double s = -2.0 * delta / den
    cdef double a
    if fabs(s) < 0.5:
        a = delta * delta * (dq + 2.0 * ys + 1.0) / ((xs + ys + dq) * den)
        return a + _log1pmx(s)
    return xs + ys - dq + log((1.0 + dq) / (2.0 * ys))


cpdef double half_zeta_sq(double x, double y, double mu):
    """``zeta**2 / 2`` at the scaled point ``(x/mu, y/mu)``, cancellation free."""
    return _half_zeta_sq(x, y, mu)


def large_mu_terms(double x, double y, double mu, bint want_p):
    """Uniform large-mu expansion at order mu + 1 plus the order shift.

    Returns ``(value_mu_plus_1, shift, n_terms, converged)``.
    """
    cdef double xs = x / mu
    cdef double ys = y / mu
    cdef double hz = _half_zeta_sq(x, y, mu)
    cdef double zeta = sqrt(2.0 * hz)
    cdef double u, zz, ee, pw, lead, pref, u2, total, bk, fjk, c, term, xis, ib, dummy
    cdef double psi[64]
    cdef double upow[128]
    cdef double minv[64]
    cdef int j, k, i, idx, small = 0, converged = 0, nterms = 0
    if y > x + mu:
        zeta = -zeta
    u = 1.0 / sqrt(2.0 * xs + 1.0)
    zz = -zeta if want_p else zeta
    ee = exp(-mu * hz)
    psi[0] = sqrt(PI / (2.0 * mu)) * erfc(-zz * sqrt(0.5 * mu))
    psi[1] = ee / mu
    pw = 1.0
    for j in range(2, _kmax + 1):
        pw *= -zz
        psi[j] = (j - 1) / mu * psi[j - 2] + pw * ee / mu
    lead = 0.5 * erfc(-zz * sqrt(0.5 * mu))
    pref = sqrt(mu / (2.0 * PI))
    u2 = u * u
    upow[0] = 1.0
    for i in range(1, 2 * _kmax + 1):
        upow[i] = upow[i - 1] * u
    minv[0] = 1.0
    for i in range(1, _kmax + 1):
        minv[i] = minv[i - 1] / mu
    total = 0.0
    for k in range(1, _kmax + 1):
        bk = 0.0
        for j in range(k + 1):
            idx = k * (_kmax + 1) + j
            fjk = upow[2 * k - j] * _poly(_f_data + _f_off[idx], _f_len[idx], u2)
            c = fjk * psi[j] * minv[k - j]
            if want_p and j % 2:
                c = -c
            bk += c
        term = pref * bk
        total += term
        nterms = k
        if fabs(term) < 1e-17 * fabs(lead + total):
            small += 1
            if small == 2:
                converged = 1
                break
        else:
            small = 0
    xis = 2.0 * sqrt(xs * ys)
    ib = _bessel_uniform_scaled(mu, xis, &dummy)
    return lead + total, ee * ib, nterms, converged


# ---------------------------------------------------------------------------
# quadrature


cdef void _theta_terms(double theta, double *gm1, double *dg, double *st, double *s2) nogil:
    cdef double h, t2, g, a, b
    cdef int i
    st[0] = sin(theta)
    h = sin(0.5 * theta)
    s2[0] = h * h
    if theta < 0.5:
        t2 = theta * theta
        a = 0.0
        b = 0.0
        for i in range(_ntheta - 1, 0, -1):
            a = a * t2 + _theta[i]
            b = b * t2 + 2 * i * _theta[i]
        gm1[0] = a * t2
        dg[0] = b * theta
    else:
        g = theta / st[0]
        gm1[0] = g - 1.0
        dg[0] = (st[0] - theta * cos(theta)) / (st[0] * st[0])


def quad_params(double x, double y, double mu):
    """Integrand parameters ``(xi_s**2, rho0, 2*ys, delta0)``."""
    cdef double xs = x / mu
    cdef double ys = y / mu
    cdef double xi2 = 4.0 * xs * ys
    cdef double rho0 = sqrt(1.0 + xi2)
    cdef double delta0 = 4.0 * ys * ((x - y + mu) / mu) / (xi2 / (rho0 + 1.0) + 2.0 * ys)
    return xi2, rho0, 2.0 * ys, delta0


cdef void _integrand(double theta, double xi2, double rho0, double ys2, double delta0,
                     double *psi, double *f) nogil:
    cdef double gm1, dg, st, s2, g, rho, drho, a, b, w, v, num, den
    _theta_terms(theta, &gm1, &dg, &st, &s2)
    g = 1.0 + gm1
    rho = sqrt(g * g + xi2)
    drho = gm1 * (g + 1.0) / (rho + rho0)
    psi[0] = -2.0 * s2 * rho + drho - log1p((gm1 + drho) / (1.0 + rho0))
    a = gm1 + drho + delta0
    b = ys2 + a
    w = a / b
    v = ys2 / b
    num = st * dg * v / rho - w - 2.0 * s2 * v
    den = w * w + 4.0 * s2 * v
    f[0] = num / den


def quad_integrand(double theta, double xi2, double rho0, double ys2, double delta0):
    """Return ``(psi(theta), f(theta))`` for 0 <= theta < pi."""
    cdef double psi, f
    _integrand(theta, xi2, rho0, ys2, delta0, &psi, &f)
    return psi, f


cdef inline double _psi_only(double theta, double xi2, double rho0) nogil:
    cdef double gm1, dg, st, s2, g, rho, drho
    _theta_terms(theta, &gm1, &dg, &st, &s2)
    g = 1.0 + gm1
    rho = sqrt(g * g + xi2)
    drho = gm1 * (g + 1.0) / (rho + rho0)
    return -2.0 * s2 * rho + drho - log1p((gm1 + drho) / (1.0 + rho0))


cdef inline double _quad_fun(double th, double mu, double xi2, double rho0, double ys2,
                             double delta0) nogil:
    cdef double psi, f
    _integrand(th, xi2, rho0, ys2, delta0, &psi, &f)
    return exp(mu * psi) * f


def quad_log(double x, double y, double mu, double cut, double rtol, int nmax):
    """Trapezoidal evaluation of the primary function.

    Returns ``(log_value, nodes, converged, pole)``.
    """
    cdef double xi2, rho0, ys2, delta0, hi, lo, mid, h, s, add, prev, cur, val
    cdef int pole, n, k, it, converged = 0
    xi2, rho0, ys2, delta0 = quad_params(x, y, mu)
    pole = 1 if fabs(delta0 / ys2) < 1e-10 else 0
    hi = PI
    if mu * _psi_only(PI * (1.0 - 1e-12), xi2, rho0) < -cut:
        lo = 0.0
        for it in range(60):
            mid = 0.5 * (lo + hi)
            if mu * _psi_only(mid, xi2, rho0) < -cut:
                hi = mid
            else:
                lo = mid
            if hi - lo < 1e-6 * hi:
                break
    else:
        hi = PI * (1.0 - 1e-12)
    n = 16
    h = hi / n
    s = 0.5 * (_quad_fun(0.0, mu, xi2, rho0, ys2, delta0) + _quad_fun(hi, mu, xi2, rho0, ys2, delta0))
    for k in range(1, n):
        s += _quad_fun(k * h, mu, xi2, rho0, ys2, delta0)
    prev = h * s
    while n < nmax:
        h *= 0.5
        add = 0.0
        for k in range(1, 2 * n, 2):
            add += _quad_fun(k * h, mu, xi2, rho0, ys2, delta0)
        s += add
        n *= 2
        cur = h * s
        if fabs(cur - prev) <= rtol * fabs(cur):
            prev = cur
            converged = 1
            break
        prev = cur
    val = fabs(prev) / PI
    if val <= 0.0:
        return -INFINITY, n, converged, pole
    return -mu * _half_zeta_sq(x, y, mu) + log(val), n, converged, pole
