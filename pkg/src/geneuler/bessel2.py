"""Two-index Bessel-like functions.

Defined as the coefficients of the expansion

    exp(x S(theta)) = sum_{m,n} exp((alpha m + beta n) theta) B_{m,n}(x)

with ``S(theta) = (e^{alpha theta} - e^{beta theta}) / (alpha - beta)``.
Expanding the power series of ``exp`` and the binomial
``(e^{alpha theta} - e^{beta theta})**k`` gives, for m, n >= 0,

    B_{m,n}(x) = (-1)**n x**(m+n) / (m! n! (alpha - beta)**(m+n))

and zero whenever either index is negative.
"""
from __future__ import annotations

from dataclasses import dataclass
import math

from .errors import DomainError, RangeError

MAX_ORDER = 170


@dataclass(frozen=True)
class BesselParams:
    """Exponent pair of the generating function.

    Passing ``window`` rejects pairs whose exponents ``alpha m + beta n``
    collide for two index pairs with ``0 <= m, n <= window``; such
    commensurate pairs merge distinct coefficients in the expansion.
    """

    alpha: float
    beta: float
    window: int | None = None

    def __post_init__(self):
        a, b = float(self.alpha), float(self.beta)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError("alpha and beta must be finite")
        if abs(a - b) <= 1e-9 * (1.0 + abs(a) + abs(b)):
            raise DomainError(f"alpha and beta must be distinct, got {a!r}, {b!r}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        if self.window is not None:
            hit = exponent_collision(a, b, self.window)
            if hit is not None:
                (m1, n1), (m2, n2) = hit
                raise DomainError(
                    f"commensurate exponents: alpha*{m1} + beta*{n1} == alpha*{m2} + beta*{n2} "
                    f"for alpha={a!r}, beta={b!r}"
                )


def exponent_collision(alpha: float, beta: float, window: int, rtol: float = 1e-12):
    """First pair of distinct (m, n) in the window sharing an exponent, or None."""
    scale = 1.0 + abs(alpha) + abs(beta)
    seen = sorted(
        (alpha * m + beta * n, (m, n)) for m in range(window + 1) for n in range(window + 1)
    )
    for (e1, k1), (e2, k2) in zip(seen, seen[1:]):
        if abs(e2 - e1) <= rtol * scale * (1 + window):
            return k1, k2
    return None


def _check(m, n, x):
    if not math.isfinite(x):
        raise DomainError("x must be finite")
    if max(abs(m), abs(n)) > MAX_ORDER or m + n > MAX_ORDER:
        raise RangeError(f"index order above {MAX_ORDER} is outside the factorial window")


def _scaled_power(p: BesselParams, m: int, n: int, x: float, power: int) -> float:
    """``(-1)**n x**power / (m! n! (alpha - beta)**power)``.

    Direct evaluation first; when the power or the factorials leave double
    range the magnitude is assembled from logarithms with the sign tracked
    separately.
    """
    sign = -1.0 if n % 2 else 1.0
    d = p.alpha - p.beta
    try:
        val = sign * (x / d) ** power / (math.factorial(m) * math.factorial(n))
        if math.isfinite(val) and (val != 0.0 or x == 0.0):
            return val
    except OverflowError:
        pass
    if x == 0.0:
        return 0.0
    log_mag = (
        power * (math.log(abs(x)) - math.log(abs(d)))
        - math.lgamma(m + 1)
        - math.lgamma(n + 1)
    )
    if (x < 0) != (d < 0) and power % 2:
        sign = -sign
    if log_mag > 709.0:
        raise RangeError("B_{m,n}(x) overflows double precision")
    return sign * math.exp(log_mag)


def bessel2_eval(p: BesselParams, m: int, n: int, x: float) -> float:
    """``B_{m,n}(x)``; zero for negative indices."""
    _check(m, n, x)
    if m < 0 or n < 0:
        return 0.0
    return _scaled_power(p, m, n, x, m + n)


def bessel2_derivative(p: BesselParams, m: int, n: int, x: float) -> float:
    """Closed-form ``d/dx B_{m,n}(x) = (m + n) B_{m,n}(x) / x``."""
    _check(m, n, x)
    if m < 0 or n < 0 or m + n == 0:
        return 0.0
    k = m + n
    return k * _scaled_power(p, m, n, x, k - 1) / (p.alpha - p.beta)


def bessel2_x_recurrence_residual(p: BesselParams, m: int, n: int, x: float) -> float:
    """``|(alpha - beta) B'_{m,n} - B_{m-1,n} + B_{m,n-1}|``."""
    lhs = (p.alpha - p.beta) * bessel2_derivative(p, m, n, x)
    return abs(lhs - bessel2_eval(p, m - 1, n, x) + bessel2_eval(p, m, n - 1, x))


def bessel2_theta_recurrence_residual(p: BesselParams, m: int, n: int, x: float) -> float:
    """``|(alpha m + beta n) B_{m,n} - x/(alpha - beta) (alpha B_{m-1,n} - beta B_{m,n-1})|``."""
    lhs = (p.alpha * m + p.beta * n) * bessel2_eval(p, m, n, x)
    rhs = x / (p.alpha - p.beta) * (
        p.alpha * bessel2_eval(p, m - 1, n, x) - p.beta * bessel2_eval(p, m, n - 1, x)
    )
    return abs(lhs - rhs)


def generating_partial_sum(p: BesselParams, x: float, theta: float, order: int) -> float:
    """``sum_{m+n <= order} exp((alpha m + beta n) theta) B_{m,n}(x)``."""
    total = 0.0
    for k in range(order + 1):
        for m in range(k + 1):
            n = k - m
            total += math.exp((p.alpha * m + p.beta * n) * theta) * bessel2_eval(p, m, n, x)
    return total
