"""Generalized Marcum Q and P functions in double precision.

>>> from marcum import marcum
>>> r = marcum(2.0, 5.0, 0.0)
>>> r.p, r.q
(0.0, 1.0)
"""

from .dispatcher import marcum, marcum_tilde, recurrence_residual, select_method
from .kernels import BACKEND
from .result import MarcumResult, Method, Status

__all__ = [
    "BACKEND",
    "MarcumResult",
    "Method",
    "Status",
    "marcum",
    "marcum_tilde",
    "recurrence_residual",
    "select_method",
]

__version__ = "0.1.0"
