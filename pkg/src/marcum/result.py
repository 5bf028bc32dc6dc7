"""Result containers shared by all evaluation branches."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

#: Values of the primary function below this are returned as zero.
UNDERFLOW = 1e-290


class Method(str, enum.Enum):
    """Evaluation branch that produced a result."""

    SERIES = "series"
    LARGE_XI = "large_xi"
    RECURRENCE = "recurrence"
    LARGE_MU = "large_mu"
    QUADRATURE = "quadrature"


class Status(str, enum.Enum):
    """Outcome code of an evaluation.

    The enumeration order is also the severity order used when merging.
    """

    OK = "ok"
    UNDERFLOW_CLAMPED = "underflow_clamped"
    DEGRADED_ACCURACY = "degraded_accuracy"
    INTERNAL_FAILURE = "internal_failure"
    INVALID_INPUT = "invalid_input"


_SEVERITY = {s: i for i, s in enumerate(Status)}


def worst(*statuses: Status) -> Status:
    """Most severe of the given statuses."""
    return max(statuses, key=_SEVERITY.__getitem__)


@dataclass(frozen=True)
class MarcumResult:
    """Values of ``P_mu(x, y)`` and ``Q_mu(x, y)`` with provenance.

    Exactly one of ``p``, ``q`` is computed; the other is its complement,
    so ``p + q == 1`` holds in floating point for every valid result.

    Attributes
    ----------
    p, q : float
        Lower and upper tail.  Both are NaN when ``status`` is
        ``INVALID_INPUT``.
    method : Method or None
        Branch that produced the values (None for invalid input).
    status : Status
        Outcome code.
    """

    p: float
    q: float
    method: Method | None
    status: Status

    @property
    def primary_is_p(self) -> bool:
        return self.p <= self.q

    @classmethod
    def invalid(cls) -> "MarcumResult":
        return cls(math.nan, math.nan, None, Status.INVALID_INPUT)

    @classmethod
    def from_primary(
        cls, value: float, is_p: bool, method: Method, status: Status = Status.OK
    ) -> "MarcumResult":
        """Build a result from the directly computed function.

        Applies the underflow clamp and complements the other tail.
        """
        if math.isnan(value):
            return cls(math.nan, math.nan, method, Status.INTERNAL_FAILURE)
        value = min(max(value, 0.0), 1.0)
        if value < UNDERFLOW:
            status = worst(status, Status.UNDERFLOW_CLAMPED)
            value = 0.0
        other = 1.0 - value
        if is_p:
            return cls(value, other, method, status)
        return cls(other, value, method, status)

    @classmethod
    def from_log_primary(
        cls, log_value: float, is_p: bool, method: Method, status: Status = Status.OK
    ) -> "MarcumResult":
        """Same as :meth:`from_primary` for a value given by its logarithm."""
        if math.isnan(log_value):
            return cls(math.nan, math.nan, method, Status.INTERNAL_FAILURE)
        if log_value < -700.0:
            return cls.from_primary(0.0, is_p, method, status)
        return cls.from_primary(math.exp(log_value), is_p, method, status)
