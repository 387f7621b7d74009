"""Hot numeric kernels.

Every function here is written in the subset of python/numpy that numba
accepts, so :func:`geneuler._accel.njit` can either compile it or hand it
back untouched. Callers validate inputs; kernels assume clean arrays.
"""
import math

import numpy as np

from ._accel import njit

EPS = 2.220446049250313e-16

# |z| below this uses the entire-function series for cosh/sinhc
_SERIES_RADIUS = 1.0
_SERIES_TERMS = 14


@njit
def cosh_sinhc(z):
    """Return ``(cosh(sqrt(z)), sinh(sqrt(z))/sqrt(z))`` for real ``z``.

    Both are entire functions of ``z``; negative ``z`` gives the circular
    counterparts. Small ``|z|`` goes through the power series so the result
    is smooth across ``z = 0``.
    """
    if abs(z) <= _SERIES_RADIUS:
        ch = 0.0
        sc = 0.0
        term = 1.0
        # term = z**k / (2k)!
        for k in range(_SERIES_TERMS):
            ch += term
            sc += term / (2 * k + 1)
            term *= z / ((2 * k + 1) * (2 * k + 2))
        return ch, sc
    if z > 0.0:
        w = math.sqrt(z)
        return math.cosh(w), math.sinh(w) / w
    w = math.sqrt(-z)
    return math.cos(w), math.sin(w) / w


@njit
def tlf_pair(a, b, theta):
    """(C, S) for the unit h**2 = a + b*h at ``theta``."""
    disc = b * b + 4.0 * a
    half = 0.5 * theta
    if disc > 0.0 and disc * half * half > _SERIES_RADIUS:
        w = 0.5 * math.sqrt(disc) * theta
        ch = math.cosh(w)
        s = 2.0 * math.sinh(w) / math.sqrt(disc)
    elif disc < 0.0 and -disc * half * half > _SERIES_RADIUS:
        r = math.sqrt(-disc)
        w = 0.5 * r * theta
        ch = math.cos(w)
        s = 2.0 * math.sin(w) / r
    else:
        ch, sc = cosh_sinhc(disc * half * half)
        s = theta * sc
    if b == 0.0:
        return ch, s
    g = math.exp(b * half)
    return g * (ch - 0.5 * b * s), g * s


@njit
def tlf_table(a, b, thetas):
    n = thetas.shape[0]
    out = np.empty((n, 2))
    for i in range(n):
        c, s = tlf_pair(a, b, thetas[i])
        out[i, 0] = c
        out[i, 1] = s
    return out


@njit
def _horner_with_derivative(p, z):
    val = p[0] + 0j
    der = 0j
    bound = abs(p[0])
    az = abs(z)
    for k in range(1, p.shape[0]):
        der = der * z + val
        val = val * z + p[k]
        bound = bound * az + abs(p[k])
    return val, der, bound


@njit
def aberth_roots(p, maxiter, tol):
    """Simultaneous Aberth-Ehrlich iteration for a monic polynomial.

    ``p`` holds complex coefficients in descending powers with ``p[0] == 1``.
    Starting points sit on a circle of radius ``1 + max|p_k|`` with a fixed
    angular offset, so the output is deterministic. Returns the roots, a
    convergence flag and the number of sweeps taken.
    """
    n = p.shape[0] - 1
    roots = np.empty(n, dtype=np.complex128)
    radius = 1.0
    for k in range(1, n + 1):
        radius = max(radius, 1.0 + abs(p[k]))
    for k in range(n):
        ang = 2.0 * math.pi * k / n + 0.4
        roots[k] = radius * complex(math.cos(ang), math.sin(ang))
    if n == 0:
        return roots, True, 0

    done = np.zeros(n, dtype=np.bool_)
    for it in range(maxiter):
        all_done = True
        for i in range(n):
            if done[i]:
                continue
            z = roots[i]
            val, der, bound = _horner_with_derivative(p, z)
            if abs(val) <= 4.0 * EPS * bound:
                done[i] = True
                continue
            all_done = False
            if der == 0:
                ratio = val / (EPS * bound + 1e-300)
            else:
                ratio = val / der
            rep = 0j
            for j in range(n):
                if j != i:
                    diff = z - roots[j]
                    if diff != 0:
                        rep += 1.0 / diff
            step = ratio / (1.0 - ratio * rep)
            roots[i] = z - step
            if abs(step) <= tol * (1.0 + abs(roots[i])):
                done[i] = True
        if all_done:
            return roots, True, it
    converged = True
    for i in range(n):
        val, der, bound = _horner_with_derivative(p, roots[i])
        if abs(val) > 1e-12 * bound:
            converged = False
    return roots, converged, maxiter


@njit
def taylor_expm(a, order, threshold):
    """Scaling-and-squaring with a truncated Taylor core; real or complex ``a``."""
    n = a.shape[0]
    norm = 0.0
    for i in range(n):
        row = 0.0
        for j in range(n):
            row += abs(a[i, j])
        norm = max(norm, row)
    s = 0
    if norm > threshold:
        s = int(math.ceil(math.log2(norm / threshold)))
    x = a / (2.0 ** s)
    # zeros_like keeps the dtype, so complex inputs compile their own variant
    eye = np.zeros_like(a)
    for i in range(n):
        eye[i, i] = 1.0
    r = eye.copy()
    for k in range(order, 0, -1):
        r = eye + (x @ r) / k
    for _ in range(s):
        r = r @ r
    return r


@njit
def interleaved_series(n, k, theta, tol):
    """Sum of theta**(n*j + k) / (n*j + k)! over j >= 0."""
    total = 0.0
    t = 1.0
    at = abs(theta)
    p = 0
    while p < 20000:
        if p % n == k:
            total += t
        p += 1
        t *= theta / p
        if p > at and (t == 0.0 or abs(t) <= tol * abs(total)):
            break
    return total


@njit
def bjorck_pereyra(x, f):
    """Solve the Vandermonde system sum_k a_k x_j**k = f_j in O(n**2).

    Newton divided differences followed by expansion into monomial
    coefficients; nodes must be pairwise distinct.
    """
    n = x.shape[0]
    a = f.copy()
    for k in range(n - 1):
        for i in range(n - 1, k, -1):
            a[i] = (a[i] - a[i - 1]) / (x[i] - x[i - k - 1])
    for k in range(n - 2, -1, -1):
        for i in range(k, n - 1):
            a[i] = a[i] - a[i + 1] * x[k]
    return a
