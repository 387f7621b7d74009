"""Third-order trigonometry.

A cubic unit ``eta**3 = a0 + a1 eta + a2 eta**2`` expands its exponential
as ``exp(eta theta) = A0 + eta A1 + eta**2 A2``. The three functions are
the coefficients of the quadratic interpolating ``exp(z theta)`` at the
three roots, i.e. the solution of a 3x3 Vandermonde system.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from . import _kernels
from .errors import DomainError, NumericError, RangeError
from .oracles import poly_roots

CONFLUENCE_RTOL = 1e-7
# repeated roots come back from the root finder only to ~eps**(1/3); results
# from root gaps below this carry the near_degenerate flag
FLAG_RTOL = 1e-4
# explicit inverse loses ~eps/gap**2; closer roots use divided differences
DIRECT_RTOL = 0.1
IMAG_RTOL = 1e-10
SERIES_TOL = 1e-17


@dataclass(frozen=True)
class CubicUnit:
    a0: float
    a1: float
    a2: float

    def __post_init__(self):
        for name in ("a0", "a1", "a2"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)

    @property
    def char_coeffs(self) -> list[float]:
        """``z**3 - a2 z**2 - a1 z - a0`` in descending powers."""
        return [1.0, -self.a2, -self.a1, -self.a0]

    @property
    def matrix(self) -> np.ndarray:
        """The companion generator with last column ``(a0, a1, a2)``."""
        return np.array([[0.0, 0.0, self.a0], [1.0, 0.0, self.a1], [0.0, 1.0, self.a2]])


@dataclass(frozen=True)
class TLFTriple:
    a0v: float
    a1v: float
    a2v: float
    theta: float
    phi: float = 0.0
    near_degenerate: bool = False

    def __iter__(self):
        yield self.a0v
        yield self.a1v
        yield self.a2v

    def as_array(self) -> np.ndarray:
        return np.array([self.a0v, self.a1v, self.a2v])


def cubic_roots(u: CubicUnit) -> np.ndarray:
    """Roots of ``z**3 - a2 z**2 - a1 z - a0``, sorted by (real, imag) descending."""
    return poly_roots(u.char_coeffs)


def _min_gap(roots):
    return min(abs(roots[i] - roots[j]) for i in range(3) for j in range(i + 1, 3))


def _node_matrix(roots, theta, phi):
    """``theta J + phi J**2`` for the lower-bidiagonal node matrix ``J``."""
    j = np.diag(roots.astype(complex)) + np.diag(np.ones(2, dtype=complex), -1)
    return theta * j + phi * (j @ j)


def _newton_coeffs(roots, theta, phi):
    """Monomial coefficients of the interpolant through divided differences.

    The divided differences of ``exp(theta z + phi z**2)`` on the nodes are
    the first column of the exponential of the node matrix, which stays
    accurate when nodes are close or equal.
    """
    d = _kernels.taylor_expm(_node_matrix(roots, theta, phi), 24, 0.5)[:, 0]
    r1, r2 = roots[0], roots[1]
    c = np.array([d[0] - d[1] * r1 + d[2] * r1 * r2, d[1] - d[2] * (r1 + r2), d[2]])
    scale = float(np.sum(np.abs(d))) * (1.0 + abs(r1) + abs(r2)) ** 2
    return c, scale


def _lagrange_coeffs(roots, values):
    """Monomial coefficients of the quadratic through ``(roots[j], values[j])``.

    Explicit inverse of the 3x3 Vandermonde matrix: node ``j`` with
    partners ``k, l`` contributes ``v_j (z - r_k)(z - r_l) / d_j``.
    Returns the coefficients and the summed magnitude of contributions.
    """
    c = np.zeros(3, dtype=complex)
    scale = 0.0
    for j in range(3):
        k, l = [i for i in range(3) if i != j]
        rj, rk, rl = roots[j], roots[k], roots[l]
        w = values[j] / ((rj - rk) * (rj - rl))
        c[0] += w * rk * rl
        c[1] -= w * (rk + rl)
        c[2] += w
        scale += abs(w) * (1.0 + abs(rk + rl) + abs(rk * rl))
    return c, scale


def _realify(c, scale):
    tol = IMAG_RTOL * (1.0 + np.abs(c.real) + scale)
    if np.any(np.abs(c.imag) > tol):
        raise NumericError(f"imaginary residue {np.abs(c.imag).max():.3g} exceeds tolerance")
    return c.real


def _exponent_guard(roots, theta, phi):
    top = max(abs(z.real * theta) + abs((z * z).real * phi) for z in roots)
    if top > 700.0:
        raise RangeError("exponential argument exceeds 700; result would overflow")


def eval_a2(u: CubicUnit, theta: float, phi: float = 0.0) -> TLFTriple:
    """Two-variable TLFs of ``exp(theta eta + phi eta**2)``.

    Each root contributes ``exp(eta_j theta + eta_j**2 phi)``; at ``phi = 0``
    this is :func:`eval_a`.
    """
    if not (math.isfinite(theta) and math.isfinite(phi)):
        raise DomainError("theta and phi must be finite")
    roots = cubic_roots(u)
    _exponent_guard(roots, theta, phi)
    size = 1.0 + float(np.max(np.abs(roots)))
    gap = _min_gap(roots)
    if gap > DIRECT_RTOL * size:
        c, scale = _lagrange_coeffs(roots, np.exp(roots * theta + roots * roots * phi))
    else:
        c, scale = _newton_coeffs(roots, theta, phi)
    a = _realify(c, scale)
    flagged = bool(gap <= FLAG_RTOL * size)
    return TLFTriple(float(a[0]), float(a[1]), float(a[2]), float(theta), float(phi), flagged)


def eval_a(u: CubicUnit, theta: float) -> TLFTriple:
    """A0, A1, A2 at ``theta`` via the Vandermonde system in the roots.

    Well separated roots go through the explicit inverse of the Vandermonde
    matrix; closer ones through Newton divided differences, which remain
    finite at repeated roots. Root gaps below ``1e-4`` (relative) set
    ``near_degenerate=True``; the roots themselves, and so the result, are
    then only good to about 1e-6.
    """
    return eval_a2(u, theta, 0.0)


def evolution_matrix3(u: CubicUnit, theta: float, phi: float = 0.0) -> np.ndarray:
    """``A0 + A1 eta + A2 eta**2`` written out entrywise."""
    A0, A1, A2 = eval_a2(u, theta, phi)
    a0, a1, a2 = u.a0, u.a1, u.a2
    return np.array([
        [A0, a0 * A2, a0 * A1 + a0 * a2 * A2],
        [A1, A0 + a1 * A2, a1 * A1 + (a0 + a1 * a2) * A2],
        [A2, A1 + a2 * A2, A0 + a2 * A1 + (a1 + a2 * a2) * A2],
    ])


def _identity_form(a0, a1, a2, A0, A1, A2):
    return (
        A0**3 + a0 * A1**3 + a0 * a0 * A2**3
        - (3 * a0 + a1 * a2) * A0 * A1 * A2
        + (2 * a1 + a2 * a2) * A0 * A0 * A2
        + (a1 * a1 - 2 * a0 * a2) * A0 * A2 * A2
        - a1 * A0 * A1 * A1
        + a2 * A0 * A0 * A1
        + a0 * a2 * A1 * A1 * A2
        - a0 * a1 * A1 * A2 * A2
    )


def _exact_form(u, triple):
    # terms can exceed the result by 1e8, so the form is summed exactly
    args = (u.a0, u.a1, u.a2, *triple)
    return _identity_form(*(Fraction(v) for v in args))


def cubic_identity_value(u: CubicUnit, triple: TLFTriple) -> float:
    """Determinant of the evolution matrix as a cubic form in (A0, A1, A2).

    Evaluated in exact rational arithmetic on the double inputs and rounded
    once at the end.
    """
    return float(_exact_form(u, triple))


def cubic_identity_residual(u: CubicUnit, theta: float, phi: float = 0.0) -> float:
    """``|det-form(A) - exp(a2 theta + (a2**2 + 2 a1) phi)|``."""
    triple = eval_a2(u, theta, phi)
    target = math.exp(u.a2 * theta + (u.a2 * u.a2 + 2.0 * u.a1) * phi)
    return abs(float(_exact_form(u, triple) - Fraction(target)))


def eisenstein_e(k: int, theta: float) -> float:
    """Pseudo-hyperbolic function ``sum_n theta**(3n+k) / (3n+k)!``."""
    if k not in (0, 1, 2):
        raise DomainError(f"k must be 0, 1 or 2, got {k!r}")
    if not math.isfinite(theta):
        raise DomainError("theta must be finite")
    if abs(theta) > 700.0:
        raise RangeError("|theta| > 700 overflows the series")
    return _kernels.interleaved_series(3, k, float(theta), SERIES_TOL)


def _sinc(x):
    return 1.0 if x == 0.0 else math.sin(x) / x


def rotation_generator(nu) -> np.ndarray:
    """Antisymmetric matrix with ``eta @ v == cross(nu, v)``."""
    n1, n2, n3 = nu
    return np.array([[0.0, -n3, n2], [n3, 0.0, -n1], [-n2, n1, 0.0]])


def exp_rotation_generator(nu, theta: float) -> np.ndarray:
    """``1 + theta sinc(nu theta) eta + theta**2/2 sinc(nu theta/2)**2 eta**2``.

    ``nu`` is the length of the axis vector, so this is a rotation by
    ``nu * theta`` about ``nu``.
    """
    nu = np.asarray(nu, dtype=float)
    if nu.shape != (3,) or not np.all(np.isfinite(nu)) or not math.isfinite(theta):
        raise DomainError("nu must be a finite 3-vector and theta finite")
    eta = rotation_generator(nu)
    norm = math.sqrt(float(nu @ nu))
    first = theta * _sinc(norm * theta)
    second = 0.5 * theta * theta * _sinc(0.5 * norm * theta) ** 2
    return np.eye(3) + first * eta + second * (eta @ eta)
