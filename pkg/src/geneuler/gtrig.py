"""Quadratic generalized units and their trigonometric-like functions.

A unit ``h`` with ``h**2 = a + b*h`` has an Euler formula
``exp(h*theta) = C(theta) + h*S(theta)``; circular (a=-1, b=0) and
hyperbolic (a=1, b=0) trigonometry are the two classical members.
"""
from __future__ import annotations

from dataclasses import dataclass
import enum
import math

import numpy as np

from . import _kernels
from .errors import DomainError

CONFLUENCE_RTOL = 1e-9


def _finite(*values):
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"expected finite real input, got {v!r}")


@dataclass(frozen=True)
class QuadraticUnit:
    """The abstract unit ``h`` obeying ``h**2 = a + b*h``."""

    a: float
    b: float

    def __post_init__(self):
        _finite(self.a, self.b)
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @classmethod
    def circular(cls) -> QuadraticUnit:
        return cls(-1.0, 0.0)

    @classmethod
    def hyperbolic(cls) -> QuadraticUnit:
        return cls(1.0, 0.0)

    @property
    def discriminant(self) -> float:
        return self.b * self.b + 4.0 * self.a

    @property
    def is_confluent(self) -> bool:
        """True when the two roots coincide within the confluence tolerance."""
        return abs(self.discriminant) <= CONFLUENCE_RTOL * max(1.0, self.b * self.b)

    @property
    def matrix(self) -> np.ndarray:
        """The 2x2 companion realization ``((0, a), (1, b))``."""
        return np.array([[0.0, self.a], [1.0, self.b]])


@dataclass(frozen=True)
class TLFPair:
    c: float
    s: float
    theta: float

    def __iter__(self):
        yield self.c
        yield self.s


class ConicKind(enum.Enum):
    HYPERBOLA = "hyperbola"
    ELLIPSE = "ellipse"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ConicClass:
    """Geometry of ``x**2 + tr*x*y + det*y**2 = 1``.

    ``chi_defined`` is False for the degenerate conic, where ``chi`` is a
    placeholder 0.
    """

    delta: float
    kind: ConicKind
    chi: float
    chi_defined: bool = True


def unit_roots(u: QuadraticUnit) -> tuple[complex, complex, float]:
    """Both roots of ``z**2 - b z - a`` and the discriminant ``b**2 + 4a``.

    ``h_plus`` has the larger real part (ties: larger imaginary part).
    """
    d = u.discriminant
    half_b = 0.5 * u.b
    if d >= 0.0:
        r = 0.5 * math.sqrt(d)
        # avoid cancellation in the smaller-magnitude root
        big = half_b + math.copysign(r, half_b) if half_b != 0.0 else r
        small = -u.a / big if big != 0.0 else -big
        hp, hm = (big, small) if big >= small else (small, big)
        return complex(hp), complex(hm), d
    r = 0.5 * math.sqrt(-d)
    return complex(half_b, r), complex(half_b, -r), d


def eval_cs(u: QuadraticUnit, theta: float) -> TLFPair:
    """C(theta), S(theta) with ``exp(h theta) = C + h S`` for both roots.

    Evaluated in real arithmetic: hyperbolic forms when the discriminant is
    positive, circular forms when negative, and a power series in
    ``discriminant * theta**2`` near zero, which reduces to the double-root
    limit ``((1 - b theta/2) e^{b theta/2}, theta e^{b theta/2})``.
    """
    _finite(theta)
    c, s = _kernels.tlf_pair(u.a, u.b, float(theta))
    return TLFPair(c, s, float(theta))


def tabulate_cs(u: QuadraticUnit, thetas) -> np.ndarray:
    """Vector form of :func:`eval_cs`; returns an ``(n, 2)`` array of (C, S)."""
    th = np.ascontiguousarray(thetas, dtype=float).reshape(-1)
    if not np.all(np.isfinite(th)):
        raise DomainError("theta values must be finite")
    return _kernels.tlf_table(u.a, u.b, th)


def eval_cs_from_roots(alpha: float, beta: float, theta: float) -> TLFPair:
    """Cosine/sine-like pair built from two real exponents.

    ``C = (alpha e^{beta t} - beta e^{alpha t}) / (alpha - beta)`` and
    ``S = (e^{alpha t} - e^{beta t}) / (alpha - beta)``. ``alpha`` and
    ``beta`` are the roots of ``h**2 = a + b h`` with ``b = alpha + beta``
    and ``a = -alpha beta``, so close or equal exponents go through the
    same series path as :func:`eval_cs`.
    """
    _finite(alpha, beta, theta)
    gap = abs(alpha - beta)
    if gap > CONFLUENCE_RTOL * (1.0 + abs(alpha) + abs(beta)) and gap * abs(theta) > 1.0:
        ea = math.exp(alpha * theta)
        eb = math.exp(beta * theta)
        d = alpha - beta
        return TLFPair((alpha * eb - beta * ea) / d, (ea - eb) / d, float(theta))
    c, s = _kernels.tlf_pair(-alpha * beta, alpha + beta, float(theta))
    return TLFPair(c, s, float(theta))


def add_angles(u: QuadraticUnit, p1: TLFPair, p2: TLFPair) -> TLFPair:
    """Addition law: the pair at ``theta1 + theta2`` from the pairs at each."""
    c = p1.c * p2.c + u.a * p1.s * p2.s
    s = p1.s * p2.c + (p1.c + u.b * p1.s) * p2.s
    return TLFPair(c, s, p1.theta + p2.theta)


def conic_coordinates(trace: float, pair: TLFPair) -> tuple[float, float]:
    """Rescale (C, S) onto the unit conic ``x**2 + tr x y + det y**2 = 1``."""
    g = math.exp(-0.5 * pair.theta * trace)
    return g * pair.c, g * pair.s


def classify_conic(m, tol: float = 1e-12) -> ConicClass:
    """Classify the conic traced by the rescaled TLFs of a 2x2 matrix.

    ``delta = (a - d)**2 / 4 + b c``: hyperbola above ``tol``, ellipse
    below ``-tol``, degenerate in between. The axis rotation angle is
    ``chi = arctan((a + d) / (a d - b c - 1)) / 2`` on the principal branch,
    so ``chi`` lies in (-pi/4, pi/4]; a vanishing denominator gives
    +-pi/4 and 0/0 gives 0.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (2, 2):
        raise DomainError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix entries must be finite")
    (a, b), (c, d) = m
    delta = 0.25 * (a - d) ** 2 + b * c
    if delta > tol:
        kind = ConicKind.HYPERBOLA
    elif delta < -tol:
        kind = ConicKind.ELLIPSE
    else:
        return ConicClass(delta, ConicKind.DEGENERATE, 0.0, chi_defined=False)
    num = a + d
    den = a * d - b * c - 1.0
    if abs(num) <= tol and abs(den) <= tol:
        chi = 0.0
    else:
        t = math.atan2(num, den)
        if t > 0.5 * math.pi:
            t -= math.pi
        elif t <= -0.5 * math.pi:
            t += math.pi
        chi = 0.5 * t
    return ConicClass(delta, kind, chi)

