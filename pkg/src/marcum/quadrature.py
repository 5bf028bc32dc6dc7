"""Trapezoidal quadrature of a real integral representation.

At the scaled point ``(xs, ys) = (x/mu, y/mu)`` the primary function equals

    exp(-mu zeta^2 / 2) / (2 pi) * int_{-pi}^{pi} exp(mu psi(theta)) f(theta) dtheta

with elementary ``psi`` and ``f``; ``psi(0) = 0`` and ``psi`` decreases to
``-inf`` at ``+-pi``.  The integrand is even, so only ``[0, pi]`` is summed.
It is Q when ``y > x + mu`` and P when ``y < x + mu``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .asymp_large_mu import signed_zeta
from .result import MarcumResult, Method, Status

#: Nodes are dropped where ``mu * psi`` falls below ``-CUT``.
CUT = 45.0
RTOL = 1e-14
MAX_NODES = 2**14


@dataclass(frozen=True)
class Integrand:
    """Parameters of the integrand at one point.

    Attributes
    ----------
    xs, ys : float
        Scaled arguments.
    xi_s : float
        ``2 sqrt(xs ys)``.
    zeta : float
        Transition variable (its square sets the prefactor).
    theta_nodes : int
        Trapezoid resolution of the last evaluation.
    mu : float
    """

    xs: float
    ys: float
    xi_s: float
    zeta: float
    theta_nodes: int = 0
    mu: float = 1.0

    @classmethod
    def from_unscaled(cls, x: float, y: float, mu: float) -> "Integrand":
        xs, ys = x / mu, y / mu
        return cls(xs, ys, 2.0 * math.sqrt(xs * ys), signed_zeta(x, y, mu), 0, mu)

    def params(self) -> tuple[float, float, float, float]:
        return kernels.quad_params(self.xs * self.mu, self.ys * self.mu, self.mu)


def r_of_theta(frame: Integrand, theta: float) -> float:
    """Saddle-path radius ``r(theta) = (theta/sin(theta) + rho) / (2 ys)``."""
    g = 1.0 if theta == 0.0 else theta / math.sin(theta)
    return (g + math.sqrt(g * g + frame.xi_s**2)) / (2.0 * frame.ys)


def integrand_eval(frame: Integrand, theta: float) -> tuple[float, float, Status]:
    """Exponent ``psi(theta)`` and amplitude ``f(theta)``.

    Parameters
    ----------
    frame : Integrand
    theta : float
        In ``(-pi, pi)``; both functions are even.

    Returns
    -------
    psi, f : float
    status : Status
        ``INTERNAL_FAILURE`` if ``theta`` sits on the pole of ``f``
        (``|r^2 - 2 r cos(theta) + 1| < 1e-10``), else ``OK``.
    """
    xi2, rho0, ys2, delta0 = frame.params()
    psi, f = kernels.quad_integrand(abs(theta), xi2, rho0, ys2, delta0)
    r = r_of_theta(frame, abs(theta))
    den = (r - 1.0) ** 2 + 4.0 * r * math.sin(0.5 * theta) ** 2
    return psi, f, (Status.INTERNAL_FAILURE if den < 1e-10 else Status.OK)


def quad_primary(x: float, y: float, mu: float) -> MarcumResult:
    """Primary function by trapezoidal quadrature.

    The node count doubles from 16 until successive sums agree to
    ``1e-14`` relative, up to ``2**14`` nodes.

    Parameters
    ----------
    x, y : float
        Unscaled arguments, ``y > 0``.
    mu : float
        Order, ``mu >= 1``.

    Returns
    -------
    MarcumResult
        Q computed when ``y > x + mu``, P when ``y < x + mu``.
    """
    if not y > 0.0:
        raise ValueError("quadrature needs y > 0")
    want_p = y < x + mu
    lv, nodes, converged, pole = kernels.quad_log(x, y, mu, CUT, RTOL, MAX_NODES)
    if pole:
        return MarcumResult(math.nan, math.nan, Method.QUADRATURE, Status.INTERNAL_FAILURE)
    status = Status.OK if converged else Status.DEGRADED_ACCURACY
    return MarcumResult.from_log_primary(lv, want_p, Method.QUADRATURE, status)
