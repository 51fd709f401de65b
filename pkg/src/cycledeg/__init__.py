"""Exact degree of the inverse cyclic Gaussian graphical model, with every route cross-checked.

The degree of the variety of inverses of cyclic tridiagonal symmetric
matrices is ``q(n) = (n+2)/4 C(2n, n) - 3 * 2^(2n-3)``. The package computes
it and the intersection numbers F and H behind it by closed forms and
by independent combinatorial routes, and verifies the supporting identities.
"""
from .calculus import degree, f_closed, f_recurrence, h_closed, h_combinatorial, q
from .errors import IntegralityError, RouteDisagreement, VerificationError
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "IntegralityError",
    "RouteDisagreement",
    "VerificationError",
    "degree",
    "f_closed",
    "f_recurrence",
    "h_closed",
    "h_combinatorial",
    "q",
]
