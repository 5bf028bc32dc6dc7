"""Order recurrences for the transition band with moderate ``mu``.

``Q_mu(x, y)`` is the dominant solution of

    y_{nu+1} - (1 + c_nu) y_nu + c_nu y_{nu-1} = 0,
    c_nu = sqrt(y/x) I_nu(xi) / I_{nu-1}(xi),   xi = 2 sqrt(x y),

so it can be carried upward in the order.  The band branch seeds it at an
order in ``[1, 2)`` with the large-xi expansion and then sums the exact
first differences ``Q_{nu+1} - Q_nu``, which obey ``D_nu = c_nu D_{nu-1}``.
``P_mu`` is the minimal solution and its ratios follow from a continued
fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import asymp_large_xi, kernels
from .result import MarcumResult, Method, Status

CF_MAX_TERMS = 10000


@dataclass(frozen=True)
class RecurrenceSeed:
    """Starting values of the upward recursion.

    Attributes
    ----------
    mu_seed : float
        Seed order, ``1 + frac(mu)``.
    q_lo, q_hi : float
        ``Q_{mu_seed}`` and ``Q_{mu_seed + 1}``.
    steps : int
        ``mu - mu_seed``, the number of unit order increments.
    status : Status
    """

    mu_seed: float
    q_lo: float
    q_hi: float
    steps: int
    status: Status = Status.OK


def seed_order(mu: float) -> float:
    """Order in ``[1, 2)`` congruent to ``mu`` modulo 1."""
    return 1.0 + (mu - math.floor(mu))


def difference(x: float, y: float, nu: float) -> float:
    """``Q_{nu+1}(x, y) - Q_nu(x, y) = (y/x)^(nu/2) exp(-x-y) I_nu(2 sqrt(x y))``.

    Uses the large-argument Bessel expansion, so ``xi`` must be large
    compared with ``nu**2``.
    """
    sx, sy = math.sqrt(x), math.sqrt(y)
    xi = 2.0 * sx * sy
    d = (y - x) / (sx + sy)
    scaled = kernels.bessel_i_scaled_exp(nu, xi).scaled_value
    return math.exp(0.5 * nu * math.log(y / x) - d * d) * scaled


def make_seed(x: float, y: float, mu: float) -> RecurrenceSeed:
    """Seed values at ``1 + frac(mu)`` from the large-xi expansion."""
    ms = seed_order(mu)
    res = asymp_large_xi.large_xi(x, y, ms)
    q_lo = res.q
    return RecurrenceSeed(ms, q_lo, q_lo + difference(x, y, ms), int(round(mu - ms)), res.status)


def coefficients(x: float, y: float, mu: float, count: int) -> tuple[list[float], Status]:
    """``c_nu`` for ``nu = mu, ..., mu + count - 1``."""
    if x == 0.0:
        return [y / (mu + j) for j in range(count)], Status.OK
    xi = 2.0 * math.sqrt(x * y)
    ratios, status = kernels.bessel_ratio_sequence(mu, xi, count)
    rho = math.sqrt(y / x)
    return [rho * r for r in ratios], status


def q_sequence(x: float, y: float, seed: RecurrenceSeed, count: int) -> list[float]:
    """``Q`` at orders ``mu_seed, mu_seed + 1, ...`` by the three-term recurrence.

    Plain textbook form of the recursion, kept for auditing the difference
    form used by :func:`q_by_forward_ttrr`.
    """
    out = [seed.q_lo, seed.q_hi]
    if count > 2:
        cs, _ = coefficients(x, y, seed.mu_seed + 1.0, count - 2)
        for c in cs:
            out.append((1.0 + c) * out[-1] - c * out[-2])
    return out[:count]


def q_by_forward_ttrr(x: float, y: float, mu: float) -> MarcumResult:
    """``Q_mu(x, y)`` by upward recursion in the order.

    Parameters
    ----------
    x, y : float
        Arguments with ``xi = 2 sqrt(x y) > 30`` (band points with
        ``x >= 30``).
    mu : float
        Order in ``[1, 135)``.

    Returns
    -------
    MarcumResult
        ``q`` from the recursion and ``p = 1 - q``.  Status is
        ``INTERNAL_FAILURE`` when the Bessel continued fraction fails or the
        value leaves ``[0, 1]``.
    """
    ms = seed_order(mu)
    seed = asymp_large_xi.large_xi(x, y, ms)
    if seed.status is Status.INTERNAL_FAILURE:
        return MarcumResult(math.nan, math.nan, Method.RECURRENCE, seed.status)
    q, ok = kernels.ttrr_q(x, y, mu, ms, seed.q)
    status = seed.status if seed.status is not Status.UNDERFLOW_CLAMPED else Status.OK
    if not ok or not (0.0 <= q <= 1.0):
        return MarcumResult(math.nan, math.nan, Method.RECURRENCE, Status.INTERNAL_FAILURE)
    return MarcumResult.from_primary(q, False, Method.RECURRENCE, status)


def p_ratio_cf(x: float, y: float, mu: float) -> float:
    """Ratio ``P_mu(x, y) / P_{mu-1}(x, y)`` of the minimal solution.

    Evaluates ``c_mu / (1 + c_mu - c_{mu+1} / (1 + c_{mu+1} - ...))`` by
    backward recursion of its tails, doubling the depth until two successive
    depths agree to 1e-15.

    Raises
    ------
    RuntimeError
        If no agreement is reached within 10**4 terms.
    """
    if not (x >= 0.0 and y > 0.0 and mu >= 1.0):
        raise ValueError("p_ratio_cf needs x >= 0, y > 0, mu >= 1")
    depth = 32
    prev = math.nan
    while depth <= CF_MAX_TERMS:
        cs, status = coefficients(x, y, mu, depth)
        if status is not Status.OK:
            break
        r = 0.0
        for c in reversed(cs):
            r = c / (1.0 + c - r)
        if abs(r - prev) <= 1e-15 * abs(r):
            return r
        prev = r
        depth *= 2
    raise RuntimeError(f"continued fraction did not converge at mu={mu}, x={x}, y={y}")
