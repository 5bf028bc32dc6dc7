"""Incomplete-gamma series for small ``x``.

``Q_mu(x, y) = exp(-x) sum_n x**n / n! Q_{mu+n}(y)`` and the same with P.
The P sum is truncated at an a-priori index obtained from a Newton solve of
the term bound; the Q sum runs forward and stops adaptively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .result import MarcumResult, Method, Status

EPS = 1e-15


@dataclass(frozen=True)
class TruncationPlan:
    """Truncation index of the gamma series.

    Attributes
    ----------
    n0 : int
        Last retained term index.
    n_e : float
        Abscissa of the minimum of the bounding function.
    eps : float
        Target size of the first neglected (normalized) term.
    newton_iters : int
        Iterations spent (bracketing plus Newton).
    status : Status
    """

    n0: int
    n_e: float
    eps: float
    newton_iters: int
    status: Status = Status.OK


def bound_function(n: float, x: float, y: float, mu: float, eps: float) -> float:
    """Simplified log-bound whose positive values certify truncation at n."""
    cst = math.lgamma(mu) - math.log(2.0 * math.pi * eps) + mu
    v = (n + mu) * math.log(n + mu) - 2.0 * n - n * (math.log(x) + math.log(y)) - cst
    if n > 0:
        v += n * math.log(n)
    return v


def log_term_bound(n: int, x: float, y: float, mu: float) -> float:
    """Log of ``(x y)**(n+1) Gamma(mu) / ((n+1)! Gamma(mu+n+1))``.

    This bounds the first neglected normalized term when the sum stops at n.
    """
    return (n + 1) * (math.log(x) + math.log(y)) + math.lgamma(mu) - math.lgamma(n + 2.0) - math.lgamma(mu + n + 1.0)


def truncation_index(x: float, y: float, mu: float, eps: float = EPS) -> TruncationPlan:
    """Number of terms needed in the gamma series.

    Parameters
    ----------
    x, y : float
        Positive arguments.
    mu : float
        Order, ``mu >= 1``.
    eps : float
        Target for the first neglected term, in ``(1e-16, 1)``.

    Returns
    -------
    TruncationPlan
    """
    if not (x > 0.0 and y > 0.0):
        raise ValueError("truncation_index needs x > 0 and y > 0")
    n0, ne, it, ok = kernels.truncation_index_raw(x, y, mu, eps)
    if ok:
        # the Newton root uses Stirling forms; settle on the smallest index
        # whose exact bound is below eps, never more than one below the root
        leps = math.log(eps)
        floor_n = max(0, n0 - 1)
        while n0 > floor_n and log_term_bound(n0 - 1, x, y, mu) < leps:
            n0 -= 1
        while log_term_bound(n0, x, y, mu) >= leps:
            n0 += 1
    return TruncationPlan(n0, ne, eps, it, Status.OK if ok else Status.INTERNAL_FAILURE)


def _gamma_only(y: float, mu: float, want_p: bool) -> MarcumResult:
    lp, lq = kernels.gamma_log_ratios(mu, y)
    return MarcumResult.from_log_primary(lp if want_p else lq, want_p, Method.SERIES)


def series_p(x: float, y: float, mu: float) -> MarcumResult:
    """``P_mu(x, y)`` by the backward-recursed gamma series.

    Parameters
    ----------
    x : float
        Noncentrality, ``0 <= x < 30`` in normal use.
    y : float
        ``y >= 0``.
    mu : float
        Order, ``mu >= 1``.

    Returns
    -------
    MarcumResult
        ``p`` computed directly, ``q = 1 - p``.
    """
    if y == 0.0:
        return MarcumResult(0.0, 1.0, Method.SERIES, Status.OK)
    if x == 0.0:
        return _gamma_only(y, mu, True)
    plan = truncation_index(x, y, mu)
    if plan.status is not Status.OK:
        return MarcumResult(math.nan, math.nan, Method.SERIES, plan.status)
    return MarcumResult.from_log_primary(kernels.series_p_log(x, y, mu, plan.n0), True, Method.SERIES)


def series_q(x: float, y: float, mu: float) -> MarcumResult:
    """``Q_mu(x, y)`` by the forward-recursed gamma series.

    Leading ``Q_{mu+n}(y)`` may be far below the final sum; the sum is kept
    in rescaled form so they never underflow individually.

    Returns
    -------
    MarcumResult
        ``q`` computed directly, ``p = 1 - q``.
    """
    if y == 0.0:
        return MarcumResult(0.0, 1.0, Method.SERIES, Status.OK)
    if x == 0.0:
        return _gamma_only(y, mu, False)
    plan = truncation_index(x, y, mu)
    if plan.status is not Status.OK:
        return MarcumResult(math.nan, math.nan, Method.SERIES, plan.status)
    lq, _ = kernels.series_q_log(x, y, mu, plan.n0, EPS)
    return MarcumResult.from_log_primary(lq, False, Method.SERIES)


def series(x: float, y: float, mu: float) -> MarcumResult:
    """Series evaluation of the primary function (P when ``y < x + mu``)."""
    if y < x + mu:
        return series_p(x, y, mu)
    return series_q(x, y, mu)
