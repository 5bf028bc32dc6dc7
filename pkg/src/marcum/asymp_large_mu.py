"""Uniform expansion for large ``mu`` around the transition line ``y = x + mu``.

The expansion is written for order ``mu + 1`` at the scaled point
``(x/mu, y/mu)``; one exact order shift brings it down to ``mu``.  Used by the
dispatcher inside the band ``f1 < y < f2`` when ``mu >= 135``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from ._coeffs import F_COEFFS, KMAX
from .result import MarcumResult, Method, Status

#: Threshold on ``(1 + 4x) |y - x - 1| / (2x + 1)**2`` (scaled) below which
#: the near-transition series for zeta is used.  The factor ``1 + 4x``
#: tracks the growth of ``c_k(x)``, roughly ``(4x)**k`` for large x.
ZETA_SERIES_MAX = 1e-3

# c_k(x) of the near-transition zeta series, ascending powers of x
C_COEFFS = (
    (1.0,),
    (-1.0 / 3.0, -1.0),
    (7.0 / 36.0, 42.0 / 36.0, 2.0),
    (-73.0 / 540.0, -657.0 / 540.0, -2142.0 / 540.0, -5.0),
    (1331.0 / 12960.0, 15972.0 / 12960.0, 76356.0 / 12960.0, 177552.0 / 12960.0, 14.0),
)


@dataclass(frozen=True)
class TransitionFrame:
    """Scaled variables of the large-mu expansion.

    Attributes
    ----------
    xs, ys : float
        ``x / mu`` and ``y / mu``.
    zeta : float
        Signed transition variable, positive when ``ys < xs + 1``.
    u : float
        ``1 / sqrt(2 xs + 1)``.
    z0 : float
        Saddle point ``2 sqrt(xs (1 + xs))``.
    xi_s : float
        ``2 sqrt(xs ys)``.
    """

    xs: float
    ys: float
    zeta: float
    u: float
    z0: float
    xi_s: float

    @classmethod
    def from_unscaled(cls, x: float, y: float, mu: float) -> "TransitionFrame":
        xs, ys = x / mu, y / mu
        return cls(
            xs,
            ys,
            signed_zeta(x, y, mu),
            1.0 / math.sqrt(2.0 * xs + 1.0),
            2.0 * math.sqrt(xs * (1.0 + xs)),
            2.0 * math.sqrt(xs * ys),
        )


def signed_zeta(x: float, y: float, mu: float) -> float:
    """zeta at the scaled point ``(x/mu, y/mu)`` from unscaled arguments."""
    z = math.sqrt(2.0 * kernels.half_zeta_sq(x, y, mu))
    return -z if y > x + mu else z


def zeta_series(xs: float, ys: float, terms: int = len(C_COEFFS)) -> float:
    """Near-transition series for zeta in powers of ``(ys-xs-1)/(2xs+1)**2``."""
    delta = ys - xs - 1.0
    w = 2.0 * xs + 1.0
    z = delta / (w * w)
    acc = 0.0
    for coeffs in reversed(C_COEFFS[:terms]):
        ck = 0.0
        for c in reversed(coeffs):
            ck = ck * xs + c
        acc = acc * z + ck
    return -delta / math.sqrt(w) * acc


def zeta_direct(xs: float, ys: float) -> float:
    """zeta from the closed form, with the sign of ``xs + 1 - ys``."""
    dq = math.sqrt(1.0 + 4.0 * xs * ys)
    half = xs + ys - dq + math.log((1.0 + dq) / (2.0 * ys))
    z = math.sqrt(max(2.0 * half, 0.0))
    return -z if ys > xs + 1.0 else z


def zeta_of(xs: float, ys: float) -> float:
    """Transition variable zeta for scaled arguments.

    Parameters
    ----------
    xs, ys : float
        Positive scaled arguments.

    Returns
    -------
    float
        ``zeta`` with ``zeta**2 / 2 = xs + ys - sqrt(1 + 4 xs ys)
        + log((1 + sqrt(1 + 4 xs ys)) / (2 ys))`` and sign of ``xs + 1 - ys``.
    """
    if not (xs > 0.0 and ys > 0.0):
        raise ValueError("zeta_of needs xs > 0 and ys > 0")
    w = 2.0 * xs + 1.0
    if abs(ys - xs - 1.0) * (1.0 + 4.0 * xs) / (w * w) < ZETA_SERIES_MAX:
        return zeta_series(xs, ys)
    return signed_zeta(xs, ys, 1.0)


def saddle_coefficients(xs: float) -> tuple[float, float]:
    """First two saddle-expansion coefficients ``(a_0, a_1)`` at scaled x."""
    return 2.0 * math.sqrt(xs * (1.0 + xs)), math.sqrt((2.0 * xs + 1.0) * xs / (xs + 1.0))


def f_coefficient(j: int, k: int, u: float) -> float:
    """Coefficient ``f_{j,k}(u)`` of the expansion (``j + k <= KMAX``)."""
    coeffs = F_COEFFS[(j, k)]
    u2 = u * u
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * u2 + c
    return u ** (j + 2 * k) * acc


def psi_j_sequence(zeta: float, mu: float, jmax: int) -> list[float]:
    """``Psi_j(zeta) = int_{-zeta sqrt(mu/2)}^inf exp(-s^2) s^j ds (2/mu)^((j+1)/2)``.

    Computed by the upward recursion from ``Psi_0`` and ``Psi_1``.
    """
    e = math.exp(-0.5 * mu * zeta * zeta)
    out = [0.0] * (jmax + 1)
    out[0] = math.sqrt(math.pi / (2.0 * mu)) * math.erfc(-zeta * math.sqrt(0.5 * mu))
    if jmax >= 1:
        out[1] = e / mu
    pw = 1.0
    for j in range(2, jmax + 1):
        pw *= -zeta
        out[j] = (j - 1) / mu * out[j - 2] + pw * e / mu
    return out


def band_bounds(x: float, mu: float, b: float = 1.0) -> tuple[float, float]:
    """Band ``x + mu -+ b sqrt(4x + 2mu)`` around the transition line."""
    w = b * math.sqrt(4.0 * x + 2.0 * mu)
    return x + mu - w, x + mu + w


def order_plus_one(x: float, y: float, mu: float, want_p: bool) -> tuple[float, float, bool]:
    """Expansion value at order ``mu + 1`` and the shift term.

    Returns
    -------
    value : float
        ``Q_{mu+1}(x, y)`` (or ``P_{mu+1}`` when ``want_p``).
    shift : float
        ``exp(-mu zeta^2/2) exp(-mu eta(xi_s)) I_mu(mu xi_s)``, which equals
        ``Q_{mu+1} - Q_mu``.
    converged : bool
    """
    value, shift, _, converged = kernels.large_mu_terms(x, y, mu, want_p)
    return value, shift, bool(converged)


def _evaluate(x: float, y: float, mu: float, want_p: bool) -> MarcumResult:
    if not (x >= 0.0 and y > 0.0):
        raise ValueError("large-mu expansion needs x >= 0 and y > 0")
    value, shift, converged = order_plus_one(x, y, mu, want_p)
    primary = value + shift if want_p else value - shift
    status = Status.OK if converged else Status.DEGRADED_ACCURACY
    return MarcumResult.from_primary(primary, want_p, Method.LARGE_MU, status)


def q_large_mu(x: float, y: float, mu: float) -> MarcumResult:
    """``Q_mu(x, y)`` by the large-mu expansion (Q computed directly).

    Parameters
    ----------
    x, y : float
        Unscaled arguments; scaling by ``mu`` happens internally.
    mu : float
        Order, normally ``>= 135``.
    """
    return _evaluate(x, y, mu, False)


def p_large_mu(x: float, y: float, mu: float) -> MarcumResult:
    """``P_mu(x, y)`` by the large-mu expansion (P computed directly)."""
    return _evaluate(x, y, mu, True)


def large_mu(x: float, y: float, mu: float) -> MarcumResult:
    """Large-mu evaluation of the primary function."""
    return _evaluate(x, y, mu, y < x + mu)

