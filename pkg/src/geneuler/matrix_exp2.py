"""Closed-form exponential of real 2x2 matrices.

By Cayley-Hamilton every 2x2 matrix obeys ``m**2 = -det(m) + tr(m) m``,
so it is itself a quadratic unit and ``exp(theta m) = C 1 + S m``.
"""
from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from . import _kernels
from .errors import DomainError, RangeError
from .gtrig import QuadraticUnit, TLFPair, eval_cs

OVERFLOW_EXPONENT = 700.0


@dataclass(frozen=True)
class Matrix2Exp:
    """Evolution matrix with its (C, S) pair and ``(a - d)**2 + 4 b c``."""

    u: np.ndarray
    cs: TLFPair
    lam: float


def as_matrix2(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix entries must be finite")
    return m


def _check_theta(theta):
    if not math.isfinite(theta):
        raise DomainError("theta must be finite")


def exp2(m, theta: float) -> Matrix2Exp:
    """``exp(theta m)`` for a real 2x2 matrix from its entry formulas.

    With ``lam = (a - d)**2 + 4 b c`` and ``g = exp(theta tr / 2)``::

        U11 = g (cosh w + (a - d)/sqrt(lam) sinh w)
        U22 = g (cosh w - (a - d)/sqrt(lam) sinh w)
        U12 / b = U21 / c = g 2/sqrt(lam) sinh w,      w = sqrt(lam) theta / 2

    read as circular functions when ``lam < 0`` and as their common
    power series in ``lam theta**2 / 4`` near ``lam = 0``.

    Raises:
        RangeError: ``|theta tr m| > 700``, where the result overflows.
    """
    m = as_matrix2(m)
    _check_theta(theta)
    (a, b), (c, d) = m
    tr = a + d
    if abs(theta * tr) > OVERFLOW_EXPONENT:
        raise RangeError(f"|theta * trace| = {abs(theta * tr):.4g} exceeds {OVERFLOW_EXPONENT}")
    lam = (a - d) ** 2 + 4.0 * b * c
    half = 0.5 * theta
    if abs(lam) * half * half > 1.0:
        w = math.sqrt(abs(lam)) * half
        if lam > 0:
            ch, sh = math.cosh(w), math.sinh(w)
        else:
            ch, sh = math.cos(w), math.sin(w)
        s_core = 2.0 * sh / math.sqrt(abs(lam))
    else:
        ch, sc = _kernels.cosh_sinhc(lam * half * half)
        s_core = theta * sc
    g = math.exp(tr * half)
    s = g * s_core
    diag = 0.5 * (a - d) * s
    u = np.array([[g * ch + diag, b * s], [c * s, g * ch - diag]])
    if not np.all(np.isfinite(u)):
        raise RangeError("matrix exponential overflowed")
    cs = _extract_cs(m, u, s)
    return Matrix2Exp(u, TLFPair(cs[0], cs[1], float(theta)), lam)


def _extract_cs(m, u, s_fallback):
    """Recover (C, S) from ``U = C 1 + S m``.

    S comes from an off-diagonal entry when the matching entry of ``m`` is
    non-zero (c first, then b), else from the diagonal difference; a
    scalar matrix carries no S information and keeps the closed-form value.
    """
    (a, b), (c, d) = m
    if c != 0.0:
        s = u[1, 0] / c
    elif b != 0.0:
        s = u[0, 1] / b
    elif a != d:
        s = (u[0, 0] - u[1, 1]) / (a - d)
    else:
        s = s_fallback
    return u[0, 0] - a * s, s


def det_identity_residual(m, theta: float) -> float:
    """``|C**2 + tr C S + det S**2 - exp(theta tr)|`` for the pair of ``m``."""
    m = as_matrix2(m)
    res = exp2(m, theta)
    c, s = res.cs.c, res.cs.s
    tr = m[0, 0] + m[1, 1]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return abs(c * c + tr * c * s + det * s * s - math.exp(theta * tr))


def exp_unit_matrix(u: QuadraticUnit, theta: float) -> np.ndarray:
    """``exp(theta h)`` for ``h = ((0, a), (1, b))``: ``((C, a S), (S, C + b S))``."""
    _check_theta(theta)
    if abs(theta * u.b) > OVERFLOW_EXPONENT:
        raise RangeError(f"|theta * b| = {abs(theta * u.b):.4g} exceeds {OVERFLOW_EXPONENT}")
    c, s = eval_cs(u, theta)
    return np.array([[c, u.a * s], [s, c + u.b * s]])


def unit_of(m) -> QuadraticUnit:
    """The quadratic unit a 2x2 matrix realizes: ``(a, b) = (-det m, tr m)``."""
    m = as_matrix2(m)
    return QuadraticUnit(-(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]), m[0, 0] + m[1, 1])
