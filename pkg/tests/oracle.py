"""Multiprecision reference values built on mpmath.

Everything here is independent of the package: gamma ratios come from
``mpmath.gammainc`` and Marcum values from the Poisson-weighted gamma series
summed with a rigorous tail bound.
"""

import mpmath as mp

DPS = 60


def _ctx(dps):
    return mp.workdps(dps)


def gamma_p(nu, y, dps=DPS):
    with _ctx(dps):
        return mp.gammainc(mp.mpf(nu), 0, mp.mpf(y), regularized=True)


def gamma_q(nu, y, dps=DPS):
    with _ctx(dps):
        return mp.gammainc(mp.mpf(nu), mp.mpf(y), mp.inf, regularized=True)


def marcum_pq(mu, x, y, dps=DPS):
    """Return ``(P, Q)`` as mpf values accurate to roughly ``dps - 10`` digits."""
    with _ctx(dps + 20):
        mu, x, y = mp.mpf(mu), mp.mpf(x), mp.mpf(y)
        if y == 0:
            return mp.mpf(0), mp.mpf(1)
        if x == 0:
            p = mp.gammainc(mu, 0, y, regularized=True)
            q = mp.gammainc(mu, y, mp.inf, regularized=True)
            return +p, +q
        ex = mp.exp(-x)
        if y < x + mu:
            # backward recursion P_nu = P_{nu+1} + d_nu is stable; start it at
            # order mu + N and grow N until the neglected tail is certified
            n_top = int(x + 10 * mp.sqrt(x) + 60)
            while True:
                p, tail = _p_series(mu, x, y, n_top)
                if tail < p * mp.mpf(10) ** (-(dps + 5)):
                    return +p, 1 - p
                n_top *= 2
        qn = mp.gammainc(mu, y, mp.inf, regularized=True)
        d = mp.exp(mu * mp.log(y) - y - mp.loggamma(mu + 1))
        w = mp.mpf(1)
        tot = mp.mpf(0)
        n = 0
        while True:
            term = w * qn
            tot += term
            qn += d
            d *= y / (mu + n + 1)
            n += 1
            w *= x / n
            # Q_{mu+n} <= 1, so the tail is below the Poisson tail of x
            if n > x + 1 and w * (1 + x) < tot * mp.mpf(10) ** (-(dps + 10)):
                break
        q = ex * tot
        return 1 - q, +q


def marcum_primary(mu, x, y, dps=DPS):
    p, q = marcum_pq(mu, x, y, dps)
    return p if y < x + mu else q


def bessel_i(nu, z, dps=DPS):
    with _ctx(dps):
        return mp.besseli(mp.mpf(nu), mp.mpf(z))


def _p_series(mu, x, y, n_top):
    """Truncated P series and an upper bound on the neglected tail."""
    nu = mu + n_top
    pn = mp.gammainc(nu, 0, y, regularized=True)
    d = mp.exp((nu - 1) * mp.log(y) - y - mp.loggamma(nu))  # d_{nu-1}
    vals = [pn]
    for n in range(n_top - 1, -1, -1):
        pn = pn + d
        vals.append(pn)
        d = d * (mu + n) / y
    vals.reverse()
    w = mp.mpf(1)
    tot = mp.mpf(0)
    for n in range(n_top + 1):
        tot += w * vals[n]
        w *= x / (n + 1)
    # P_{mu+n} <= P_{mu+N} for n > N and the Poisson tail sums to below
    # w_{N+1} / (1 - x/(N+2))
    ratio = x / (n_top + 2)
    tail = w * vals[n_top] / (1 - ratio) if ratio < 1 else mp.inf
    ex = mp.exp(-x)
    return ex * tot, ex * tail
