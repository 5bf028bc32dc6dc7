"""Public entry points: region dispatch, validation and notation conversion.

Routing, first match wins (``xi = 2 sqrt(x y)``, ``f1, f2 = x + mu -+
sqrt(4x + 2mu)``):

1. ``x < 30``                        -> series
2. ``xi > 30`` and ``mu**2 < 2 xi``  -> large-xi expansion
3. ``f1 < y < f2`` and ``mu < 135``  -> order recurrence
4. ``f1 < y < f2`` and ``mu >= 135`` -> large-mu expansion
5. otherwise                         -> quadrature

The smaller of P and Q (P when ``y < x + mu``) is computed and the other
follows by complement.
"""

from __future__ import annotations

import math

from . import asymp_large_mu, asymp_large_xi, quadrature, recurrence, series
from .result import UNDERFLOW, MarcumResult, Method, Status, worst

X_SERIES = 30.0
XI_MIN = 30.0
MU_LARGE = 135.0
MU_VALIDATED = 1e4
_LOG_UNDERFLOW = math.log(UNDERFLOW)


def _p_surely_underflows(mu: float, y: float) -> bool:
    # P_mu(x, y) <= P_mu(0, y) <= y**mu / Gamma(mu + 1)
    return mu * math.log(y) - math.lgamma(mu + 1.0) < _LOG_UNDERFLOW


def select_method(mu: float, x: float, y: float) -> Method:
    """Branch that :func:`marcum` uses for a valid ``(mu, x, y)``."""
    if x < X_SERIES:
        return Method.SERIES
    xi = 2.0 * math.sqrt(x * y)
    if xi > XI_MIN and mu * mu < 2.0 * xi:
        return Method.LARGE_XI
    f1, f2 = asymp_large_mu.band_bounds(x, mu)
    if f1 < y < f2:
        return Method.RECURRENCE if mu < MU_LARGE else Method.LARGE_MU
    return Method.QUADRATURE


def _valid(mu: float, x: float, y: float) -> bool:
    return (
        all(isinstance(v, (int, float)) and math.isfinite(v) for v in (mu, x, y))
        and mu >= 1.0
        and x >= 0.0
        and y >= 0.0
    )


def marcum(mu: float, x: float, y: float) -> MarcumResult:
    """Generalized Marcum functions ``P_mu(x, y)`` and ``Q_mu(x, y)``.

    Parameters
    ----------
    mu : float
        Order, ``mu >= 1``.
    x : float
        Noncentrality, ``x >= 0``.
    y : float
        Threshold, ``y >= 0``.

    Returns
    -------
    MarcumResult
        ``p + q == 1``.  Primary values below ``1e-290`` are returned as 0
        with status ``UNDERFLOW_CLAMPED``; invalid arguments give NaNs with
        status ``INVALID_INPUT``; orders above ``1e4`` are evaluated but
        flagged ``DEGRADED_ACCURACY``.

    Examples
    --------
    >>> r = marcum(8192, 409.6, 8601.6)
    >>> round(r.q, 12), r.method.value
    (0.498535453743, 'large_mu')
    """
    try:
        mu, x, y = float(mu), float(x), float(y)
    except (TypeError, ValueError):
        return MarcumResult.invalid()
    if not _valid(mu, x, y):
        return MarcumResult.invalid()
    method = select_method(mu, x, y)
    if y == 0.0:
        res = MarcumResult(0.0, 1.0, method, Status.OK)
    elif y < x + mu and _p_surely_underflows(mu, y):
        res = MarcumResult(0.0, 1.0, method, Status.UNDERFLOW_CLAMPED)
    elif method is Method.SERIES:
        res = series.series(x, y, mu)
    elif method is Method.LARGE_XI:
        res = asymp_large_xi.large_xi(x, y, mu)
    elif method is Method.RECURRENCE:
        res = recurrence.q_by_forward_ttrr(x, y, mu)
    elif method is Method.LARGE_MU:
        res = asymp_large_mu.large_mu(x, y, mu)
    else:
        res = quadrature.quad_primary(x, y, mu)
    if mu > MU_VALIDATED and res.status in (Status.OK, Status.UNDERFLOW_CLAMPED):
        res = MarcumResult(res.p, res.q, res.method, worst(res.status, Status.DEGRADED_ACCURACY))
    return res


def marcum_tilde(m: float, alpha: float, beta: float) -> MarcumResult:
    """Marcum functions in the ``(alpha, beta)`` notation.

    ``Q~_m(alpha, beta) = Q_m(alpha**2 / 2, beta**2 / 2)``.
    """
    try:
        m, alpha, beta = float(m), float(alpha), float(beta)
    except (TypeError, ValueError):
        return MarcumResult.invalid()
    if not (alpha >= 0.0 and beta >= 0.0):
        return MarcumResult.invalid()
    return marcum(m, 0.5 * alpha * alpha, 0.5 * beta * beta)


def recurrence_residual(mu: float, x: float, y: float, min_value: float = 0.0) -> float:
    """Deviation from 1 of the normalized four-term order recurrence.

    With ``F`` equal to P when ``y < x + mu`` and Q otherwise, returns

    * ``|((x-mu) F_{mu+1} + (y+mu) F_mu) / (x F_{mu+2} + y F_{mu-1}) - 1|``
      when ``x >= mu``, and
    * ``|(y+mu) F_mu / (x F_{mu+2} + (mu-x) F_{mu+1} + y F_{mu-1}) - 1|``
      when ``x < mu`` (all terms positive).

    NaN is returned if any of the four values is invalid, was clamped to
    zero, or is not above ``min_value``.

    Parameters
    ----------
    mu : float
        Order, ``mu >= 2`` so that ``mu - 1`` is admissible.
    x, y : float
        Arguments.
    min_value : float, optional
        Lower limit on the four function values.
    """
    use_p = y < x + mu
    vals = []
    for k in (-1, 0, 1, 2):
        r = marcum(mu + k, x, y)
        if r.status in (Status.INVALID_INPUT, Status.INTERNAL_FAILURE, Status.UNDERFLOW_CLAMPED):
            return math.nan
        v = r.p if use_p else r.q
        if not v > min_value:
            return math.nan
        vals.append(v)
    fm1, f0, f1, f2 = vals
    if x < mu:
        ratio = (y + mu) * f0 / (x * f2 + (mu - x) * f1 + y * fm1)
    else:
        ratio = ((x - mu) * f1 + (y + mu) * f0) / (x * f2 + y * fm1)
    return abs(ratio - 1.0)
