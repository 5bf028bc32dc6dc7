"""Scalar special-function primitives.

The numerical inner loops live in a compiled extension (``_ckernels``) with
a pure-Python twin (``_pykernels``).  The compiled build is used when it
imports; set ``MARCUM_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from . import _pykernels
from ._coeffs import U_COEFFS
from .result import Status


def _load_backend():
    choice = os.environ.get("MARCUM_BACKEND", "auto").lower()
    if choice != "python":
        try:
            from . import _ckernels

            return _ckernels, "cython"
        except ImportError:
            if choice == "cython":
                raise
    return _pykernels, "python"


_k, BACKEND = _load_backend()

# re-exported inner kernels (backend dependent)
erfcx = _k.erfcx
log1pmx = _k.log1pmx
log_gamma_prefactor = _k.log_gamma_prefactor
gamma_log_ratios = _k.gamma_log_ratios
truncation_index_raw = _k.truncation_index
series_p_log = _k.series_p_log
series_q_log = _k.series_q_log
upper_gamma_cf = _k.upper_gamma_cf
large_xi_log = _k.large_xi_log
bessel_ratio_cf = _k.bessel_ratio_cf
ttrr_q = _k.ttrr_q
half_zeta_sq = _k.half_zeta_sq
large_mu_terms = _k.large_mu_terms
quad_integrand = _k.quad_integrand
quad_params = _k.quad_params
quad_log = _k.quad_log

erfc = math.erfc
eta = _pykernels.eta
phi_hat = _pykernels.phi_hat


@dataclass(frozen=True)
class GammaPair:
    """Regularized incomplete gamma ratios ``P_nu(y)`` and ``Q_nu(y)``."""

    p: float
    q: float
    nu: float
    y: float
    status: Status = Status.OK


@dataclass(frozen=True)
class BesselScaled:
    """An exponentially scaled modified Bessel value.

    ``scaled_value`` is ``exp(-mu*eta(z)) I_mu(mu*z)`` for the uniform
    expansion (``eta`` set) or ``exp(-t) I_mu(t)`` for the large-argument
    expansion (``eta`` is None).
    """

    order: float
    argument: float
    scaled_value: float
    eta: float | None
    status: Status = Status.OK


def gamma_ratios(nu: float, y: float) -> GammaPair:
    """Regularized incomplete gamma ratios.

    Parameters
    ----------
    nu : float
        Order, ``nu >= 0``.
    y : float
        Argument, ``y >= 0``.

    Returns
    -------
    GammaPair
        ``P_nu(y) = gamma(nu, y) / Gamma(nu)`` and its complement; the
        smaller member carries full relative accuracy.

    Raises
    ------
    ValueError
        If ``nu`` or ``y`` is negative or both are zero.
    """
    if not (nu >= 0.0 and y >= 0.0) or (nu == 0.0 and y == 0.0):
        raise ValueError(f"gamma_ratios needs nu >= 0, y >= 0, not both zero; got {nu}, {y}")
    if y == 0.0:
        return GammaPair(0.0, 1.0, nu, y)
    if nu == 0.0:
        return GammaPair(1.0, 0.0, nu, y)
    lp, lq = gamma_log_ratios(nu, y)
    if lp < lq:
        p = math.exp(lp)
        return GammaPair(p, 1.0 - p, nu, y)
    q = math.exp(lq)
    return GammaPair(1.0 - q, q, nu, y)


def gamma_ratio_step(pair: GammaPair, direction: str = "forward") -> GammaPair:
    """Move a gamma ratio pair one order up or down.

    Uses ``Q_{nu+1}(y) = Q_nu(y) + d`` and ``P_{nu+1}(y) = P_nu(y) - d`` with
    ``d = y**nu exp(-y) / Gamma(nu + 1)`` (at order ``nu`` going forward,
    at ``nu - 1`` going backward).  The smaller member of the result is
    updated by the stable direction and the other is complemented.

    Parameters
    ----------
    pair : GammaPair
        Starting pair.
    direction : {"forward", "backward"}

    Returns
    -------
    GammaPair
        Pair at ``nu + 1`` or ``nu - 1``.  Status is ``UNDERFLOW_CLAMPED``
        when the additive term underflows.
    """
    nu, y = pair.nu, pair.y
    if direction == "forward":
        base, new_nu = nu, nu + 1.0
    elif direction == "backward":
        if nu < 1.0:
            raise ValueError("backward step needs nu >= 1")
        base, new_nu = nu - 1.0, nu - 1.0
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if y == 0.0:
        return GammaPair(0.0, 1.0, new_nu, y)
    if base == 0.0:
        d = math.exp(-y)
    else:
        d = math.exp(log_gamma_prefactor(base, y))
    status = Status.UNDERFLOW_CLAMPED if d == 0.0 else Status.OK
    if direction == "forward":
        # Q grows going forward: stable for Q, complement P when Q is small
        if pair.q <= pair.p:
            q = pair.q + d
            return GammaPair(1.0 - q, q, new_nu, y, status)
        p = pair.p - d
        return GammaPair(p, 1.0 - p, new_nu, y, status)
    if pair.p <= pair.q:
        p = pair.p + d
        return GammaPair(p, 1.0 - p, new_nu, y, status)
    q = pair.q - d
    return GammaPair(1.0 - q, q, new_nu, y, status)


def bessel_ratio_sequence(mu: float, xi: float, count: int) -> tuple[list[float], Status]:
    """Ratios ``r_nu = I_nu(xi) / I_{nu-1}(xi)`` for ``nu = mu, ..., mu+count-1``.

    The top ratio comes from the continued fraction; the rest follow from the
    downward recurrence ``r_nu = 1 / (2 nu / xi + r_{nu+1})``.

    Returns
    -------
    ratios : list of float
    status : Status
        ``INTERNAL_FAILURE`` if the continued fraction did not converge.
    """
    if not xi > 0.0:
        raise ValueError("xi must be positive")
    if count < 1:
        raise ValueError("count must be >= 1")
    out = [0.0] * count
    r, ok = bessel_ratio_cf(mu + count - 1, xi)
    out[-1] = r
    for j in range(count - 2, -1, -1):
        r = 1.0 / (2.0 * (mu + j) / xi + r)
        out[j] = r
    return out, (Status.OK if ok else Status.INTERNAL_FAILURE)


def debye_u(k: int, t: float) -> float:
    """Debye polynomial ``u_k(t)`` from the embedded tables."""
    acc = 0.0
    for c in reversed(U_COEFFS[k]):
        acc = acc * t + c
    return acc


def bessel_i_scaled_uniform(mu: float, z: float, kmax: int | None = None) -> BesselScaled:
    """``exp(-mu*eta(z)) I_mu(mu*z)`` by the uniform large-order expansion.

    Parameters
    ----------
    mu : float
        Order (large).
    z : float
        Scaled argument, ``z > 0``.
    kmax : int, optional
        Highest Debye polynomial used; defaults to all stored tables.
    """
    if kmax is None:
        kmax = len(U_COEFFS) - 1
    if not 0 <= kmax < len(U_COEFFS):
        raise ValueError(f"kmax must be in [0, {len(U_COEFFS) - 1}]")
    w = math.sqrt(1.0 + z * z)
    t = 1.0 / w
    total = 1.0
    scale = 1.0
    prev = 1.0
    ratio = 0.0
    for k in range(1, kmax + 1):
        scale /= mu
        term = debye_u(k, t) * scale
        total += term
        ratio = abs(term) / prev if prev > 0.0 else 0.0
        if abs(term) < 1e-17 * abs(total):
            break
        prev = abs(term)
    value = total / math.sqrt(2.0 * math.pi * mu * w)
    status = Status.DEGRADED_ACCURACY if ratio > 0.1 else Status.OK
    return BesselScaled(mu, z, value, eta(z), status)


def bessel_i_scaled_exp(mu: float, t: float, nmax: int = 60) -> BesselScaled:
    """``exp(-t) I_mu(t)`` by the large-argument expansion.

    The coefficients follow ``A_n = A_{n-1} (4 mu^2 - (2n-1)^2) / (8n)`` and
    the sum is cut at its smallest term.
    """
    m2 = 4.0 * mu * mu
    a = 1.0
    total = 1.0
    best = math.inf
    for n in range(1, nmax + 1):
        a *= -(m2 - (2 * n - 1) ** 2) / (8.0 * n * t)
        if abs(a) > best:
            break
        total += a
        best = abs(a)
        if best < 1e-17 * abs(total):
            break
    status = Status.DEGRADED_ACCURACY if best > 1e-13 * abs(total) else Status.OK
    return BesselScaled(mu, t, total / math.sqrt(2.0 * math.pi * t), None, status)


def hankel_a(n: int, mu: float) -> float:
    """Large-argument coefficient ``A_n(mu)`` by its term-ratio recurrence."""
    m2 = 4.0 * mu * mu
    a = 1.0
    for k in range(1, n + 1):
        a *= (m2 - (2 * k - 1) ** 2) / (8.0 * k)
    return a
