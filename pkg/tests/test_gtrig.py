import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from geneuler.errors import DomainError
from geneuler.gtrig import (
    ConicKind,
    QuadraticUnit,
    TLFPair,
    add_angles,
    classify_conic,
    conic_coordinates,
    eval_cs,
    eval_cs_from_roots,
    tabulate_cs,
    unit_roots,
)
from geneuler.oracles import expm_oracle

coef = st.floats(-4, 4, allow_nan=False)
angle = st.floats(-3, 3, allow_nan=False)


def test_unit_roots_circular_hyperbolic_eisenstein():
    assert unit_roots(QuadraticUnit(-1, 0)) == (1j, -1j, -4.0)
    assert unit_roots(QuadraticUnit(1, 0)) == (1, -1, 4.0)
    hp, hm, d = unit_roots(QuadraticUnit(-1, -1))
    assert d == -3.0
    assert abs(hp - complex(-0.5, math.sqrt(3) / 2)) < 1e-15
    assert abs(hm - complex(-0.5, -math.sqrt(3) / 2)) < 1e-15


@given(coef, coef)
def test_roots_solve_the_unit_equation(a, b):
    u = QuadraticUnit(a, b)
    hp, hm, _ = unit_roots(u)
    for h in (hp, hm):
        assert abs(h * h - b * h - a) < 1e-10 * (1 + abs(a) + abs(b))
    assert hp.real > hm.real or (hp.real == hm.real and hp.imag >= hm.imag)
    assert abs(hp + hm - b) < 1e-12 * (1 + abs(b))


def test_unit_rejects_nonfinite():
    with pytest.raises(DomainError):
        QuadraticUnit(math.nan, 0)
    with pytest.raises(DomainError):
        eval_cs(QuadraticUnit(1, 0), math.inf)


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.5])
def test_circular_reduction(theta):
    p = eval_cs(QuadraticUnit.circular(), theta)
    assert abs(p.c - math.cos(theta)) < 1e-15
    assert abs(p.s - math.sin(theta)) < 1e-15


def test_eisenstein_closed_form():
    p = eval_cs(QuadraticUnit(-1, -1), 1.0)
    r = math.sqrt(3) / 2
    assert abs(p.c - math.exp(-0.5) * (math.cos(r) + math.sin(r) / math.sqrt(3))) < 1e-15
    assert abs(p.s - 2 * math.exp(-0.5) / math.sqrt(3) * math.sin(r)) < 1e-15


def test_confluent_unit_matches_matrix_oracle():
    u = QuadraticUnit(-1, 2)  # double root at 1
    p = eval_cs(u, 0.7)
    assert abs(p.c - 0.3 * math.exp(0.7)) < 1e-15
    assert abs(p.s - 0.7 * math.exp(0.7)) < 1e-15
    o = expm_oracle(u.matrix, 0.7)
    assert abs(o[0, 0] - p.c) < 1e-14 and abs(o[1, 0] - p.s) < 1e-14


@given(coef, coef, angle)
def test_euler_formula_at_both_roots(a, b, theta):
    u = QuadraticUnit(a, b)
    p = eval_cs(u, theta)
    scale = 1 + abs(p.c) + abs(p.s)
    for h in unit_roots(u)[:2]:
        assert abs(cmath.exp(h * theta) - (p.c + h * p.s)) < 1e-10 * scale


@settings(max_examples=300)
@given(coef, coef, angle)
def test_ode_system(a, b, theta):
    u = QuadraticUnit(a, b)
    h = 1e-5
    lo, mid, hi = eval_cs(u, theta - h), eval_cs(u, theta), eval_cs(u, theta + h)
    dc = (hi.c - lo.c) / (2 * h)
    ds = (hi.s - lo.s) / (2 * h)
    scale = 1 + abs(mid.c) + abs(mid.s)
    assert abs(dc - a * mid.s) < 1e-8 * scale
    assert abs(ds - (mid.c + b * mid.s)) < 1e-8 * scale


def test_from_roots_hyperbolic_and_origin():
    for theta in (0.2, 1.0, 3.0):
        p = eval_cs_from_roots(1.0, -1.0, theta)
        assert abs(p.c - math.cosh(theta)) < 1e-14 * math.cosh(theta)
        assert abs(p.s - math.sinh(theta)) < 1e-14 * math.cosh(theta)
    assert tuple(eval_cs_from_roots(2.0, 3.0, 0.0)) == (1.0, 0.0)


def test_from_roots_confluent_branch():
    p = eval_cs_from_roots(2.0, 2.0, 0.5)
    assert abs(p.c) < 1e-15
    assert abs(p.s - 0.5 * math.e) < 1e-15
    # series oracle: C = sum_k (1-k) (2 theta)^k/k! ... via the double-root Taylor form
    series_s = math.fsum(0.5 * (1.0) ** k / math.factorial(k) for k in range(30))
    assert abs(p.s - series_s) < 1e-15


def test_from_roots_continuity():
    for theta in (-2.0, 0.4, 1.7):
        near = eval_cs_from_roots(1.3, 1.3 + 1e-6, theta)
        at = eval_cs_from_roots(1.3, 1.3, theta)
        scale = 1 + abs(at.c) + abs(at.s)
        assert abs(near.c - at.c) < 1e-5 * scale and abs(near.s - at.s) < 1e-5 * scale


def test_from_roots_matches_unit():
    alpha, beta = 0.7, -1.9
    u = QuadraticUnit(-alpha * beta, alpha + beta)
    for theta in (-1.0, 0.3, 2.2):
        p, q = eval_cs_from_roots(alpha, beta, theta), eval_cs(u, theta)
        assert abs(p.c - q.c) < 1e-13 * (1 + abs(q.c)) and abs(p.s - q.s) < 1e-13 * (1 + abs(q.s))


def test_add_angles_identity_and_circular():
    u = QuadraticUnit(2, 1)
    p1 = eval_cs(u, 0.3)
    assert add_angles(u, p1, TLFPair(1.0, 0.0, 0.0)) == p1
    c = QuadraticUnit.circular()
    s = add_angles(c, eval_cs(c, 0.4), eval_cs(c, 0.9))
    assert abs(s.c - math.cos(1.3)) < 1e-15 and abs(s.s - math.sin(1.3)) < 1e-15


def test_add_angles_frozen_example():
    u = QuadraticUnit(2, 1)
    s = add_angles(u, eval_cs(u, 0.3), eval_cs(u, 0.5))
    d = eval_cs(u, 0.8)
    assert abs(s.c - d.c) < 1e-14 and abs(s.s - d.s) < 1e-14


@settings(max_examples=1000)
@given(coef, coef, angle, angle)
def test_addition_semigroup(a, b, t1, t2):
    u = QuadraticUnit(a, b)
    s = add_angles(u, eval_cs(u, t1), eval_cs(u, t2))
    d = eval_cs(u, t1 + t2)
    scale = abs(d.c) + abs(d.s) + 1e-300
    # products of TLFs carry the rounding of the larger factors
    f1, f2 = eval_cs(u, t1), eval_cs(u, t2)
    scale = max(scale, (abs(f1.c) + abs(f1.s)) * (abs(f2.c) + abs(f2.s)) * 1e-3)
    assert abs(s.c - d.c) + abs(s.s - d.s) < 1e-10 * scale


def test_classical_reduction_wide_range():
    # reference is the C library through ``math``; numpy's vectorized cosh
    # can sit one ulp away, which at |theta| = 10 is already 1.8e-12
    th = np.linspace(-10, 10, 1001)
    circ = tabulate_cs(QuadraticUnit.circular(), th)
    hyp = tabulate_cs(QuadraticUnit.hyperbolic(), th)
    for fn, col, tab in ((math.cos, 0, circ), (math.sin, 1, circ), (math.cosh, 0, hyp), (math.sinh, 1, hyp)):
        ref = np.array([fn(t) for t in th])
        assert np.max(np.abs(tab[:, col] - ref)) < 1e-13


def test_tabulate_matches_scalar():
    u = QuadraticUnit(0.3, -1.1)
    th = np.linspace(-3, 3, 17)
    tab = tabulate_cs(u, th)
    for t, (c, s) in zip(th, tab):
        p = eval_cs(u, t)
        assert (c, s) == (p.c, p.s)


def test_series_branch_continuity_across_zero_discriminant():
    th = 1.3
    base = eval_cs(QuadraticUnit(-1, 2), th)
    for eps in (1e-12, -1e-12, 1e-8, -1e-8):
        p = eval_cs(QuadraticUnit(-1 + eps, 2), th)
        assert abs(p.c - base.c) < 10 * abs(eps) + 1e-15
        assert abs(p.s - base.s) < 10 * abs(eps) + 1e-15


@pytest.mark.parametrize(
    "m, delta, kind, chi",
    [
        ([[0, -1], [1, 0]], -1.0, ConicKind.ELLIPSE, 0.0),
        ([[0, 1], [1, 0]], 1.0, ConicKind.HYPERBOLA, 0.0),
        ([[1, 0], [0, 1]], 0.0, ConicKind.DEGENERATE, 0.0),
    ],
)
def test_classify_conic_examples(m, delta, kind, chi):
    cls = classify_conic(m)
    assert cls.delta == delta and cls.kind is kind and cls.chi == chi
    assert cls.chi_defined == (kind is not ConicKind.DEGENERATE)


def test_classify_conic_zero_denominator_gives_quarter_pi():
    # a d - b c - 1 = 0 with a + d > 0
    cls = classify_conic([[2.0, 1.0], [1.0, 1.0]])
    assert cls.kind is ConicKind.HYPERBOLA
    assert abs(cls.chi - math.pi / 4) < 1e-15


def test_classify_conic_rejects_bad_shape():
    with pytest.raises(DomainError):
        classify_conic(np.eye(3))


@settings(max_examples=200)
@given(st.lists(st.floats(-3, 3, allow_nan=False), min_size=4, max_size=4), angle)
def test_conic_identity(entries, theta):
    from geneuler.matrix_exp2 import exp2

    m = np.array(entries).reshape(2, 2)
    tr, det = m[0, 0] + m[1, 1], m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    x, y = conic_coordinates(tr, exp2(m, theta).cs)
    scale = 1 + x * x + abs(tr * x * y) + abs(det) * y * y
    assert abs(x * x + tr * x * y + det * y * y - 1) < 1e-10 * scale
