"""Offline generator for the large-order expansion coefficient tables.

Writes ``src/marcum/_coeffs.py`` with

* ``U_COEFFS[k]``: coefficients of the Debye polynomial u_k(t) in powers of t,
* ``F_COEFFS[(j, k)]``: f_{j,k}(u) = u**(j + 2k) * sum_i c_i * (u**2)**i,
* ``THETA_SIN``: Maclaurin coefficients of theta / sin(theta) in theta**2,

all stored as floats rounded from exact rationals.

The f_{j,k} follow from mapping phi(z) - phi(z0) = v**2 / 2 with
z = z0 * (1 + eps) around the saddle z0 = sqrt(1 - u**4) / u**2 and
expanding z/(2x) * (1 + z**2)**(-1/4) * u_k(t) * dz/dv in powers of v.
With that substitution every coefficient is rational in u.

Run:  python3 tools/gen_coeffs.py [KMAX]
"""

import sys
import time
from fractions import Fraction
from pathlib import Path

import sympy as sp
from sympy import QQ
from sympy.polys.fields import field

K, u = field("u", QQ)


def s_mul(a, b, n):
    out = [K(0)] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n + 1 - i]):
            if bj != 0:
                out[i + j] += ai * bj
    return out


def s_pow_binom(x, alpha, n):
    """(1 + x)**alpha for a series x with x[0] == 0."""
    out = [K(0)] * (n + 1)
    out[0] = K(1)
    term = [K(1)] + [K(0)] * n
    coef = Fraction(1)
    for m in range(1, n + 1):
        term = s_mul(term, x, n)
        coef = coef * (alpha - m + 1) / m
        c = K(QQ(coef.numerator, coef.denominator))
        out = [o + c * t for o, t in zip(out, term)]
    return out


def s_log1p(x, n):
    out = [K(0)] * (n + 1)
    term = [K(1)] + [K(0)] * n
    for m in range(1, n + 1):
        term = s_mul(term, x, n)
        c = K(QQ((-1) ** (m + 1), m))
        out = [o + c * t for o, t in zip(out, term)]
    return out


def s_compose(f, g, n):
    """f(g(v)) with g[0] == 0."""
    out = [K(0)] * (n + 1)
    out[0] = f[0]
    power = [K(1)] + [K(0)] * n
    for m in range(1, n + 1):
        power = s_mul(power, g, n)
        if f[m] != 0:
            out = [o + f[m] * p for o, p in zip(out, power)]
    return out


def debye_polys(kmax):
    t, s = sp.symbols("t s")
    polys = [sp.Integer(1)]
    for _ in range(kmax):
        uk = polys[-1]
        nxt = sp.Rational(1, 2) * t**2 * (1 - t**2) * sp.diff(uk, t) + sp.Rational(1, 8) * sp.integrate(
            ((1 - 5 * s**2) * uk.subs(t, s)), (s, 0, t)
        )
        polys.append(sp.expand(nxt))
    return [sp.Poly(p, t) for p in polys]


def main(kmax):
    t0 = time.time()
    n = kmax + 3
    # eps-series of Phi(eps) = phi(z0 (1 + eps)) - phi(z0)
    eps = [K(0), K(1)] + [K(0)] * (n - 1)
    delta = [K(0), 2 * (1 - u**4), (1 - u**4)] + [K(0)] * (n - 2)
    sq = s_pow_binom(delta, Fraction(1, 2), n)
    sq_m1 = [K(0)] + sq[1:]
    phi = [K(0)] * (n + 1)
    lg = s_log1p(eps, n)
    phi = [p - 2 * c for p, c in zip(phi, lg)]
    phi[1] += (1 + u**2) / u**2
    phi[2] += (1 + u**2) / (2 * u**2)
    phi = [p - c / u**2 for p, c in zip(phi, sq_m1)]
    lg2 = s_log1p([c / (1 + u**2) for c in sq_m1], n)
    phi = [p + c for p, c in zip(phi, lg2)]
    assert phi[0] == 0 and phi[1] == 0, phi[:2]
    # v = eps * b1 * (1 + R)**(1/2), 2*Phi = eps**2 * (2 Phi_2) * (1 + R)
    two_phi2 = 2 * phi[2]
    b1 = (1 + u**2) / u
    assert two_phi2 == b1**2, two_phi2
    rest = [K(0)] + [2 * phi[m + 2] / two_phi2 for m in range(1, n - 1)] + [K(0)]
    root = s_pow_binom(rest[: n], Fraction(1, 2), n - 1)
    v_of_eps = [K(0)] + [b1 * c for c in root[: n]]
    # series reversion
    e = [K(0)] * (n + 1)
    e[1] = 1 / b1
    for m in range(2, n + 1):
        comp = s_compose(v_of_eps, e, m)
        e[m] = -comp[m] / b1
    print("reversion done", time.time() - t0, flush=True)
    de = [(m + 1) * e[m + 1] for m in range(n)] + [K(0)]
    delta_v = s_compose(delta, e, n)
    t_factor = s_pow_binom(delta_v, Fraction(-1, 2), n)  # t = u**2 * t_factor
    q_factor = s_pow_binom(delta_v, Fraction(-1, 4), n)
    one_eps = [K(1)] + e[1:]
    base = s_mul(s_mul(one_eps, de, n), q_factor, n)
    base = [(1 + u**2) / u * c for c in base]
    # powers of t as v-series
    polys = debye_polys(kmax)
    tpow = [[K(1)] + [K(0)] * n]
    maxdeg = max(p.degree() for p in polys)
    tser = [u**2 * c for c in t_factor]
    for _ in range(maxdeg):
        tpow.append(s_mul(tpow[-1], tser, n))
    fcoef = {}
    for k in range(kmax + 1):
        uk = [K(0)] * (n + 1)
        for (deg,), c in polys[k].terms():
            cq = K(QQ(int(c.p), int(c.q)))
            uk = [a + cq * b for a, b in zip(uk, tpow[deg])]
        fk = s_mul(base, uk, n)
        for j in range(kmax + 1 - k):
            fcoef[(j, k)] = fk[j]
        print("k", k, time.time() - t0, flush=True)
    usym = sp.Symbol("u")
    rows = {}
    for (j, k), val in sorted(fcoef.items()):
        expr = sp.factor(sp.sympify(str(val.as_expr())).subs(sp.Symbol("u"), usym))
        num, den = sp.fraction(sp.together(expr))
        poly_num = sp.Poly(num, usym)
        poly_den = sp.Poly(den, usym)
        assert poly_den.is_monomial or poly_den.degree() == 0, (j, k, den)
        q, r = sp.div(poly_num, poly_den)
        assert r.is_zero, (j, k)
        low = j + 2 * k
        coeffs = []
        for (deg,), c in sp.Poly(q, usym).terms():
            assert deg >= low and (deg - low) % 2 == 0, (j, k, deg)
        qd = sp.Poly(q, usym).as_dict()
        top = max(d for (d,) in qd) if qd else low
        for d in range(low, top + 1, 2):
            coeffs.append(qd.get((d,), 0))
        rows[(j, k)] = coeffs
    write_module(rows, polys, kmax)
    print("total", time.time() - t0)


N_THETA = 16


def fmt(c):
    return repr(float(sp.Rational(c)))


def write_module(rows, polys, kmax):
    out = ['"""Expansion coefficient tables (generated by tools/gen_coeffs.py; do not edit)."""', ""]
    out.append(f"KMAX = {kmax}")
    out.append("")
    out.append("# u_k(t) = sum_i U_COEFFS[k][i] * t**i")
    out.append("U_COEFFS = (")
    for p in polys:
        deg = p.degree()
        cs = [p.coeff_monomial(sp.Symbol("t") ** i) for i in range(deg + 1)]
        out.append("    (" + ", ".join(fmt(c) for c in cs) + ",),")
    out.append(")")
    out.append("")
    out.append("# f_{j,k}(u) = u**(j + 2k) * sum_i F_COEFFS[j, k][i] * u**(2i)")
    out.append("F_COEFFS = {")
    for (j, k), cs in sorted(rows.items(), key=lambda r: (r[0][0] + r[0][1], r[0][1])):
        out.append(f"    ({j}, {k}): (" + ", ".join(fmt(c) for c in cs) + ",),")
    out.append("}")
    out.append("")
    out.append("# theta / sin(theta) = sum_i THETA_SIN[i] * theta**(2i)")
    th = sp.Symbol("th")
    ser = sp.series(th / sp.sin(th), th, 0, 2 * N_THETA).removeO()
    cs = [ser.coeff(th, 2 * i) for i in range(N_THETA)]
    out.append("THETA_SIN = (" + ", ".join(fmt(c) for c in cs) + ",)")
    path = Path(__file__).resolve().parents[1] / "src" / "marcum" / "_coeffs.py"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 16)
