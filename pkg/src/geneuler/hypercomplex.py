"""Numbers ``x + h y`` over a quadratic unit and analytic functions of them.

A power series evaluated at ``z = x + h y`` splits as ``u(x, y) + h v(x, y)``;
the pair ``w = (u, v)`` then satisfies ``d_y w = H d_x w`` with
``H = ((0, a), (1, b))``, and consequently
``(d_y**2 - a d_x**2 - b d_x d_y) w = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import math
import warnings

import numpy as np

from .errors import DomainError, RangeError, TruncationWarning
from .gtrig import QuadraticUnit, eval_cs, unit_roots
from .matrix_exp2 import OVERFLOW_EXPONENT

PRESET_TERMS = 64
TAIL_RTOL = 1e-13


@dataclass(frozen=True)
class HypercomplexNumber:
    x: float
    y: float
    unit: QuadraticUnit

    def __add__(self, other):
        if isinstance(other, (int, float)):
            return HypercomplexNumber(self.x + other, self.y, self.unit)
        if not isinstance(other, HypercomplexNumber):
            return NotImplemented
        _check_units(self, other)
        return HypercomplexNumber(self.x + other.x, self.y + other.y, self.unit)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HypercomplexNumber(-self.x, -self.y, self.unit)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return HypercomplexNumber(self.x * other, self.y * other, self.unit)
        return hc_mul(self, other)

    __rmul__ = __mul__

    def as_matrix(self) -> np.ndarray:
        """The faithful 2x2 representation ``x 1 + y H``."""
        return self.x * np.eye(2) + self.y * self.unit.matrix

    def modulus(self) -> float:
        """Largest ``|x + h_k y|`` over the two roots ``h_k`` of the unit.

        A power series converges at ``z`` when this is inside its radius.
        """
        hp, hm, _ = unit_roots(self.unit)
        return max(abs(self.x + hp * self.y), abs(self.x + hm * self.y))


def _check_units(z1, z2):
    if z1.unit != z2.unit:
        raise DomainError(f"unit mismatch: {z1.unit} vs {z2.unit}")


def hc_mul(z1: HypercomplexNumber, z2: HypercomplexNumber) -> HypercomplexNumber:
    _check_units(z1, z2)
    a, b = z1.unit.a, z1.unit.b
    yy = z1.y * z2.y
    return HypercomplexNumber(
        z1.x * z2.x + a * yy,
        z1.x * z2.y + z2.x * z1.y + b * yy,
        z1.unit,
    )


def hc_exp(z: HypercomplexNumber) -> HypercomplexNumber:
    """``e**x (C(y) + h S(y))``."""
    if not (math.isfinite(z.x) and math.isfinite(z.y)):
        raise DomainError("components must be finite")
    hp, hm, _ = unit_roots(z.unit)
    if abs(z.x) + max(abs(hp.real), abs(hm.real)) * abs(z.y) > OVERFLOW_EXPONENT:
        raise RangeError("exponential argument exceeds overflow limit")
    c, s = eval_cs(z.unit, z.y)
    g = math.exp(z.x)
    return HypercomplexNumber(g * c, g * s, z.unit)


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Maclaurin series ``sum_k coeffs[k] z**k``.

    ``polynomial=True`` marks an exact polynomial, which has no tail.
    """

    coeffs: tuple[float, ...]
    radius_hint: float = math.inf
    name: str = field(default="series", compare=False)
    polynomial: bool = False

    def __post_init__(self):
        c = tuple(float(v) for v in self.coeffs)
        if not c:
            raise DomainError("need at least one coefficient")
        if not all(math.isfinite(v) for v in c):
            raise DomainError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def exp(cls, terms: int = PRESET_TERMS) -> PowerSeries:
        return cls(tuple(1.0 / math.factorial(k) for k in range(terms + 1)), name="exp")

    @classmethod
    def sin(cls, terms: int = PRESET_TERMS) -> PowerSeries:
        c = [0.0 if k % 2 == 0 else (-1.0) ** (k // 2) / math.factorial(k) for k in range(terms + 1)]
        return cls(tuple(c), name="sin")

    @classmethod
    def cos(cls, terms: int = PRESET_TERMS) -> PowerSeries:
        c = [(-1.0) ** (k // 2) / math.factorial(k) if k % 2 == 0 else 0.0 for k in range(terms + 1)]
        return cls(tuple(c), name="cos")

    @classmethod
    def geometric(cls, terms: int = PRESET_TERMS) -> PowerSeries:
        return cls((1.0,) * (terms + 1), radius_hint=1.0, name="geometric")

    @classmethod
    def identity(cls) -> PowerSeries:
        return cls((0.0, 1.0), name="identity", polynomial=True)

    @classmethod
    def square(cls) -> PowerSeries:
        return cls((0.0, 0.0, 1.0), name="square", polynomial=True)


PRESETS = {
    "exp": PowerSeries.exp,
    "sin": PowerSeries.sin,
    "cos": PowerSeries.cos,
    "geometric": PowerSeries.geometric,
    "identity": PowerSeries.identity,
    "square": PowerSeries.square,
}


def analytic_eval(f: PowerSeries, z: HypercomplexNumber) -> tuple[float, float]:
    """``(u, v)`` with ``f(x + h y) = u + h v``, by Horner's rule.

    Warns with :class:`TruncationWarning` when ``z`` lies outside
    ``f.radius_hint`` or the last retained term is not negligible.
    """
    a, b = z.unit.a, z.unit.b
    u, v = f.coeffs[-1], 0.0
    for c in f.coeffs[-2::-1]:
        # (u + h v)(x + h y) + c
        yy = v * z.y
        u, v = u * z.x + a * yy + c, u * z.y + v * z.x + b * yy
    rho = z.modulus()
    k = len(f.coeffs) - 1
    tail = 0.0 if f.polynomial else abs(f.coeffs[-1]) * rho**k
    if rho >= f.radius_hint or tail > TAIL_RTOL * max(abs(u) + abs(v), 1e-300):
        warnings.warn(
            f"series '{f.name}' may be truncated at |z| = {rho:.3g} (last term {tail:.3g})",
            TruncationWarning,
            stacklevel=2,
        )
    return u, v


def _w(f, unit, x, y):
    return np.array(analytic_eval(f, HypercomplexNumber(x, y, unit)))


def cauchy_riemann_residual(f: PowerSeries, unit: QuadraticUnit, x: float, y: float,
                            step: float = 1e-4) -> float:
    """Max-norm of ``d_y w - H d_x w`` by central differences."""
    if step <= 0:
        raise DomainError("step must be positive")
    dx = (_w(f, unit, x + step, y) - _w(f, unit, x - step, y)) / (2.0 * step)
    dy = (_w(f, unit, x, y + step) - _w(f, unit, x, y - step)) / (2.0 * step)
    return float(np.max(np.abs(dy - unit.matrix @ dx)))


def wave_pde_residual(f: PowerSeries, unit: QuadraticUnit, x: float, y: float,
                      step: float = 1e-3) -> float:
    """Max over components of ``(d_y**2 - a d_x**2 - b d_x d_y) w``."""
    if step <= 0:
        raise DomainError("step must be positive")
    h = step
    w0 = _w(f, unit, x, y)
    dxx = (_w(f, unit, x + h, y) - 2.0 * w0 + _w(f, unit, x - h, y)) / (h * h)
    dyy = (_w(f, unit, x, y + h) - 2.0 * w0 + _w(f, unit, x, y - h)) / (h * h)
    dxy = (
        _w(f, unit, x + h, y + h) - _w(f, unit, x + h, y - h)
        - _w(f, unit, x - h, y + h) + _w(f, unit, x - h, y - h)
    ) / (4.0 * h * h)
    return float(np.max(np.abs(dyy - unit.a * dxx - unit.b * dxy)))
