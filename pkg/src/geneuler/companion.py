"""Exponentials of n x n matrices through their companion matrix.

If ``L`` is the companion of the characteristic polynomial of ``Q``, then
``Q**m = sum_k Q**k (L**m e)_k`` with ``e = (1, 0, ..., 0)``, and hence
``exp(theta Q) = sum_k Q**k (exp(theta L) e)_k``. The n coefficients
``exp(theta L) e`` are the n-th order trigonometric-like functions; for
distinct eigenvalues they solve a Vandermonde system in the roots.
"""
from __future__ import annotations

from dataclasses import dataclass
import math
import warnings

import numpy as np

from . import _kernels
from .errors import AccuracyWarning, DomainError, RangeError
from .oracles import expm_oracle, poly_roots

MAX_DIM = 12
CONFLUENCE_RTOL = 1e-7
SEPARATION_WARN = 1e-3
IMAG_RTOL = 1e-8


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial ``sum_k p_k z**(n-k)``; ``coeffs[0] == 1``."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        if not c or c[0] != 1.0:
            raise DomainError("characteristic polynomial must be monic (p_0 == 1)")
        if not all(math.isfinite(v) for v in c):
            raise DomainError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return np.polyval(self.coeffs, z)


@dataclass(frozen=True)
class TLFVector:
    values: np.ndarray
    theta: float
    near_degenerate: bool = False
    min_separation: float = math.inf


def as_square(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.ndim != 2 or q.shape[0] != q.shape[1] or q.shape[0] < 1:
        raise DomainError(f"expected a non-empty square matrix, got shape {q.shape}")
    if q.shape[0] > MAX_DIM:
        raise DomainError(f"dimension {q.shape[0]} exceeds the supported maximum {MAX_DIM}")
    if not np.all(np.isfinite(q)):
        raise DomainError("matrix entries must be finite")
    return q


def char_poly(q) -> CharPoly:
    """Characteristic polynomial by the Faddeev-LeVerrier trace recursion."""
    q = as_square(q)
    n = q.shape[0]
    eye = np.eye(n)
    m = np.zeros((n, n))
    p = [1.0]
    for k in range(1, n + 1):
        m = q @ m + p[-1] * eye
        p.append(-np.trace(q @ m) / k)
    return CharPoly(tuple(p))


def companion_matrix(p: CharPoly) -> np.ndarray:
    """Unit subdiagonal, last column ``(-p_n, ..., -p_1)``."""
    n = p.degree
    if n < 1:
        raise DomainError("companion matrix needs degree >= 1")
    if n > MAX_DIM:
        raise DomainError(f"degree {n} exceeds the supported maximum {MAX_DIM}")
    lmat = np.zeros((n, n))
    lmat[np.arange(1, n), np.arange(n - 1)] = 1.0
    lmat[:, -1] = -np.array(p.coeffs[:0:-1])
    return lmat


def _min_separation(roots):
    n = len(roots)
    if n < 2:
        return math.inf
    return min(abs(roots[i] - roots[j]) for i in range(n) for j in range(i + 1, n))


def tlf_vector(p: CharPoly, theta: float) -> TLFVector:
    """``exp(theta L) e`` for the companion ``L`` of ``p``.

    Distinct roots: Bjorck-Pereyra solve of the Vandermonde system with
    right-hand side ``exp(theta root_j)``. Near-coincident roots fall back to
    the Taylor reference exponential of ``L`` itself.
    """
    if not math.isfinite(theta):
        raise DomainError("theta must be finite")
    n = p.degree
    if n > MAX_DIM:
        raise DomainError(f"degree {n} exceeds the supported maximum {MAX_DIM}")
    if n == 0:
        return TLFVector(np.zeros(0), float(theta))
    roots = poly_roots(p.coeffs)
    if max(z.real * theta for z in roots) > 700.0:
        raise RangeError("exponential argument exceeds 700; result would overflow")
    size = 1.0 + float(np.max(np.abs(roots)))
    sep = _min_separation(roots)
    if sep > CONFLUENCE_RTOL * size:
        values = np.exp(theta * roots)
        c = _kernels.bjorck_pereyra(np.ascontiguousarray(roots), np.ascontiguousarray(values))
        if np.all(np.abs(c.imag) <= IMAG_RTOL * (1.0 + np.abs(c).max())):
            return TLFVector(c.real.copy(), float(theta), sep < SEPARATION_WARN, sep)
    col = expm_oracle(companion_matrix(p), theta)[:, 0]
    return TLFVector(col, float(theta), True, sep)


def power_basis_sum(q, coeffs) -> np.ndarray:
    """``sum_k Q**k coeffs[k]`` by Horner's rule."""
    q = np.asarray(q, dtype=float)
    n = q.shape[0]
    eye = np.eye(n)
    r = coeffs[-1] * eye
    for c in coeffs[-2::-1]:
        r = r @ q + c * eye
    return r


def exp_n(q, theta: float) -> np.ndarray:
    """``exp(theta Q)`` reassembled from the companion TLF vector.

    Emits :class:`AccuracyWarning` when eigenvalues are closer than 1e-3;
    the identity is exact for any matrix, but accuracy then degrades.
    """
    q = as_square(q)
    vec = tlf_vector(char_poly(q), theta)
    if vec.near_degenerate:
        warnings.warn(
            f"eigenvalue separation {vec.min_separation:.3g} below {SEPARATION_WARN}; "
            "reduced accuracy",
            AccuracyWarning,
            stacklevel=2,
        )
    return power_basis_sum(q, vec.values)
