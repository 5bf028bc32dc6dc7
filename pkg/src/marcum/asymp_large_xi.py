"""Expansion for large ``xi = 2 sqrt(x y)``, uniform in ``sigma``.

Valid for ``xi > 30`` and ``mu**2 < 2 xi``.  The Q form is used for
``y > x`` and the P form for ``y < x``.  The ``n = 0`` term is combined
analytically so the expansion stays finite on ``x = y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .result import MarcumResult, Method, Status

NMAX = kernels._pykernels.XI_NMAX


@dataclass(frozen=True)
class LargeXiFrame:
    """Derived parameters of the large-xi expansion.

    Attributes
    ----------
    xi : float
        ``2 sqrt(x y)``.
    sigma : float
        ``(sqrt(y) - sqrt(x))**2 / xi``.
    rho : float
        ``sqrt(y / x)``.
    n_terms : int
        Terms used by the last evaluation (0 for a bare frame).
    """

    xi: float
    sigma: float
    rho: float
    n_terms: int = 0

    @classmethod
    def from_xy(cls, x: float, y: float) -> "LargeXiFrame":
        sx, sy = math.sqrt(x), math.sqrt(y)
        xi = 2.0 * sx * sy
        d = (y - x) / (sx + sy)
        return cls(xi, d * d / xi, sy / sx)


def phi_sequence(frame: LargeXiFrame, nmax: int = NMAX) -> tuple[list[float], Status]:
    """Integrals ``Phi_n = int_xi^inf exp(-sigma t) t**(-n-1/2) dt``.

    The recursion is run upward from ``n = 0`` when ``sigma xi < 1`` and
    otherwise outward from a continued-fraction seed at ``n ~ sigma xi``,
    backward below it and forward above it.

    Returns
    -------
    phis : list of float
        ``Phi_0 ... Phi_nmax``; ``Phi_0`` is ``inf`` when ``sigma == 0``.
    status : Status
    """
    xi, sigma = frame.xi, frame.sigma
    scaled = kernels.phi_hat(xi, sigma, nmax)
    factor = math.exp(-sigma * xi)
    return [v * factor for v in scaled], Status.OK


def _evaluate(x: float, y: float, mu: float, want_p: bool) -> MarcumResult:
    lv, nterms, converged = kernels.large_xi_log(x, y, mu, want_p)
    status = Status.OK if converged else Status.DEGRADED_ACCURACY
    return MarcumResult.from_log_primary(lv, want_p, Method.LARGE_XI, status)


def q_large_xi(x: float, y: float, mu: float) -> MarcumResult:
    """``Q_mu(x, y)`` for ``y >= x`` by the large-xi expansion.

    Terms are added until they drop below ``1e-17`` of the leading term or
    stop decreasing (optimal truncation), with at most 30 terms.
    """
    if y < x:
        raise ValueError("q_large_xi needs y >= x")
    return _evaluate(x, y, mu, False)


def p_large_xi(x: float, y: float, mu: float) -> MarcumResult:
    """``P_mu(x, y)`` for ``y < x`` by the large-xi expansion."""
    if y >= x:
        raise ValueError("p_large_xi needs y < x")
    return _evaluate(x, y, mu, True)


def large_xi(x: float, y: float, mu: float) -> MarcumResult:
    """Large-xi evaluation, choosing the form by the sign of ``y - x``."""
    return _evaluate(x, y, mu, y < x)
