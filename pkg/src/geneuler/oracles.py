"""Brute-force reference implementations.

Nothing in here imports the closed-form modules; the equivalence tests
depend on that separation. The polynomial root finder is the exception
to "verification only": the Vandermonde constructions call it too.
"""
from dataclasses import dataclass
import math

import numpy as np

from . import _kernels
from .errors import DomainError, NumericError

MAX_ORACLE_DIM = 16
MAX_POLY_DEGREE = 12


@dataclass(frozen=True)
class OracleConfig:
    taylor_order: int = 20
    squaring_threshold: float = 0.5
    fd_step: float = 1e-5
    series_tol: float = 1e-17
    max_iter: int = 200
    root_tol: float = 1e-14

    def __post_init__(self):
        if self.taylor_order < 8:
            raise DomainError("taylor_order must be at least 8")
        for name in ("squaring_threshold", "fd_step", "series_tol", "root_tol"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be positive")


DEFAULT_CONFIG = OracleConfig()


def _as_square(q):
    q = np.asarray(q, dtype=float)
    if q.ndim != 2 or q.shape[0] != q.shape[1] or q.shape[0] < 1:
        raise DomainError(f"expected a non-empty square matrix, got shape {q.shape}")
    if not np.all(np.isfinite(q)):
        raise DomainError("matrix entries must be finite")
    return q


def expm_oracle(q, theta: float = 1.0, cfg: OracleConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Return ``exp(theta * q)`` by Taylor scaling and squaring."""
    q = _as_square(q)
    if q.shape[0] > MAX_ORACLE_DIM:
        raise DomainError(f"oracle supports n <= {MAX_ORACLE_DIM}, got {q.shape[0]}")
    if not math.isfinite(theta):
        raise DomainError("theta must be finite")
    a = np.ascontiguousarray(theta * q)
    return _kernels.taylor_expm(a, cfg.taylor_order, cfg.squaring_threshold)


def _sort_roots(roots, real_coeffs):
    """Clean up and order roots by (real, imag) descending.

    For real polynomials the output is made exactly conjugation-symmetric:
    near-real roots are snapped to the axis and the rest are paired with
    their nearest conjugate, both members sharing one averaged value.
    """
    roots = np.array(roots, dtype=complex)
    if real_coeffs and roots.size:
        snap = np.abs(roots.imag) <= 1e-12 * (1.0 + np.abs(roots))
        real = list(roots[snap].real.astype(complex))
        rest = sorted(roots[~snap], key=lambda z: -z.imag)
        if len(rest) % 2:
            j = int(np.argmin([abs(z.imag) for z in rest]))
            real.append(complex(rest.pop(j).real))
        upper, lower = rest[: len(rest) // 2], rest[len(rest) // 2:]
        out = real
        for z in upper:
            j = int(np.argmin([abs(z - w.conjugate()) for w in lower]))
            w = lower.pop(j)
            gap = abs(z - w.conjugate())
            if gap <= 1e-6 * (1.0 + abs(z)) or abs(z.imag) > gap:
                zz = 0.5 * (z + w.conjugate())
                out.extend([zz, zz.conjugate()])
            else:
                # two separate real roots that merely carried round-off
                out.extend([complex(z.real), complex(w.real)])
        roots = np.array(out, dtype=complex)
    order = sorted(range(len(roots)), key=lambda i: (-roots[i].real, -roots[i].imag))
    return roots[order]


def _cardano_cubic(p):
    """Closed-form roots of the monic real cubic z**3 + p1 z**2 + p2 z + p3."""
    _, b, c, d = (float(np.real(v)) for v in p)
    shift = -b / 3.0
    pp = c - b * b / 3.0
    qq = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (qq / 2.0) ** 2 + (pp / 3.0) ** 3
    if disc < 0.0:
        r = 2.0 * math.sqrt(-pp / 3.0)
        arg = max(-1.0, min(1.0, 3.0 * qq / (pp * r)))
        phi = math.acos(arg) / 3.0
        out = [r * math.cos(phi - 2.0 * math.pi * k / 3.0) + shift for k in range(3)]
        return np.array(out, dtype=complex)
    sq = math.sqrt(disc)
    u = float(np.cbrt(-qq / 2.0 + sq))
    v = float(np.cbrt(-qq / 2.0 - sq))
    re = -0.5 * (u + v) + shift
    im = 0.5 * math.sqrt(3.0) * (u - v)
    return np.array([u + v + shift, complex(re, im), complex(re, -im)])


def poly_roots(coeffs, cfg: OracleConfig = DEFAULT_CONFIG) -> np.ndarray:
    """All complex roots of a monic polynomial.

    Args:
        coeffs: ``p_0 .. p_n`` in descending powers, ``p_0 == 1``.
        cfg: iteration cap and step tolerance.

    Returns:
        Roots sorted by real part then imaginary part, both descending.

    Raises:
        NumericError: the iteration stalls and no closed form applies.
    """
    p = np.asarray(coeffs)
    if p.ndim != 1 or p.shape[0] < 1:
        raise DomainError("coefficients must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(p)):
        raise DomainError("coefficients must be finite")
    if p[0] != 1:
        raise DomainError("polynomial must be monic (p_0 == 1)")
    n = p.shape[0] - 1
    if n > MAX_POLY_DEGREE:
        raise DomainError(f"degree {n} exceeds the supported maximum {MAX_POLY_DEGREE}")
    real_coeffs = not np.iscomplexobj(p) or bool(np.all(p.imag == 0))
    if n == 0:
        return np.empty(0, dtype=complex)
    pc = np.ascontiguousarray(p, dtype=complex)
    roots, ok, _ = _kernels.aberth_roots(pc, cfg.max_iter, cfg.root_tol)
    if not ok:
        if n == 3 and real_coeffs:
            roots = _cardano_cubic(pc)
        else:
            raise NumericError(f"root finder did not converge in {cfg.max_iter} sweeps")
    return _sort_roots(roots, real_coeffs)


def fd_derivative(f, x: float, order: int = 1, step: float = DEFAULT_CONFIG.fd_step) -> float:
    """Central-difference first or second derivative, error O(step**2)."""
    if step <= 0:
        raise DomainError("step must be positive")
    if order == 1:
        return (f(x + step) - f(x - step)) / (2.0 * step)
    if order == 2:
        return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step)
    raise DomainError("order must be 1 or 2")


def interleaved_series(n: int, k: int, theta: float, cfg: OracleConfig = DEFAULT_CONFIG) -> float:
    """``sum_j theta**(n j + k) / (n j + k)!``, the k-th n-fold split of exp."""
    if n < 1 or not 0 <= k < n:
        raise DomainError("need n >= 1 and 0 <= k < n")
    return _kernels.interleaved_series(n, k, float(theta), cfg.series_tol)
