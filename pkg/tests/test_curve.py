"""Function field arithmetic, valuations, series, and principal divisors."""

import random
from fractions import Fraction

import pytest

from plurisusy import polyq
from plurisusy.curve import (Divisor, HyperellipticCurve,
                             UnrepresentableSupportError, standard_curve)

C2 = standard_curve(2)  # y^2 = x(x-1)(x-2)(x-3)(x-4)
C3 = standard_curve(3)


def test_constructor_rejects_bad_f():
    with pytest.raises(ValueError):
        HyperellipticCurve(polyq.poly([1, 0, 1]))  # even degree
    with pytest.raises(ValueError):
        HyperellipticCurve(polyq.from_roots([Fraction(0)] * 3))  # not squarefree
    with pytest.raises(ValueError):
        HyperellipticCurve(polyq.poly([0, 1]))  # degree below 5


def test_genus():
    assert C2.genus == 2
    assert C3.genus == 3
    assert standard_curve(6).genus == 6


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------


def test_point_kinds():
    inf = C2.infinity()
    assert inf.at_infinity
    W0 = C2.branch_point(Fraction(0))
    assert W0.is_branch() and W0.y == 0
    P = C2.point(Fraction(-1), sign=1)
    Q = C2.point(Fraction(-1), sign=-1)
    assert P != Q
    assert P.conjugate() == Q
    assert not P.is_rational()  # f(-1) = -120 is not a square
    R = C2.point(Fraction(5))  # f(5) = 120, still not a square
    assert not R.is_rational()


def test_point_with_rational_y():
    # g=2 curve through (-1, 12): roots 0,1,2,3,-7
    C = HyperellipticCurve(polyq.from_roots(
        [Fraction(r) for r in (0, 1, 2, 3, -7)]))
    P = C.point(Fraction(-1), y=Fraction(12))
    assert P.is_rational() and P.y == 12
    with pytest.raises(ValueError):
        C.point(Fraction(-1), y=Fraction(5))  # 25 != f(-1)


def test_rational_branch_points():
    pts = C2.rational_branch_points()
    assert [p.x for p in pts] == [0, 1, 2, 3, 4]


# ---------------------------------------------------------------------------
# valuations
# ---------------------------------------------------------------------------


def test_valuations_at_infinity():
    inf = C2.infinity()
    assert C2.valuation(C2.x_fn(), inf) == -2
    assert C2.valuation(C2.y_fn(), inf) == -5
    inf3 = C3.infinity()
    assert C3.valuation(C3.x_fn(), inf3) == -2
    assert C3.valuation(C3.y_fn(), inf3) == -7


def test_valuations_at_branch_point():
    W0 = C2.branch_point(Fraction(0))
    x, y = C2.x_fn(), C2.y_fn()
    assert C2.valuation(x, W0) == 2
    assert C2.valuation(y, W0) == 1
    assert C2.valuation(y / x, W0) == -1
    W1 = C2.branch_point(Fraction(1))
    assert C2.valuation(x, W1) == 0
    assert C2.valuation(x - 1, W1) == 2


def test_valuation_at_generic_point():
    P = C2.point(Fraction(-1))
    x = C2.x_fn()
    assert C2.valuation(x + 1, P) == 1
    assert C2.valuation(x, P) == 0
    # y - y(P) vanishes at P only on P's sheet
    assert C2.valuation(C2.y_fn(), P) == 0


def test_valuation_sheet_separation():
    # (y - 12) vanishes at (-1, 12) but not at (-1, -12)
    C = HyperellipticCurve(polyq.from_roots(
        [Fraction(r) for r in (0, 1, 2, 3, -7)]))
    P = C.point(Fraction(-1), y=Fraction(12))
    Q = C.point(Fraction(-1), y=Fraction(-12))
    fn = C.y_fn() - 12
    assert C.valuation(fn, P) >= 1
    assert C.valuation(fn, Q) == 0


def _random_function(curve, rng):
    def rpoly(deg):
        return polyq.poly([Fraction(rng.randint(-3, 3)) for _ in range(deg + 1)])

    while True:
        A = rpoly(rng.randint(0, 2))
        B = rpoly(rng.randint(0, 1)) if rng.random() < 0.6 else polyq.ZERO
        den = rpoly(rng.randint(0, 1))
        if den and (A or B):
            return curve.function(A, B, den)


def _random_point(curve, rng):
    roll = rng.random()
    if roll < 0.2:
        return curve.infinity()
    if roll < 0.4:
        pts = curve.rational_branch_points()
        return pts[rng.randrange(len(pts))]
    x0 = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
    if polyq.eval_at(curve.f, x0) == 0:
        return curve.branch_point(x0)
    return curve.point(x0, sign=rng.choice((1, -1)))


def test_valuation_product_rule():
    rng = random.Random(10)
    for _ in range(100):
        f = _random_function(C2, rng)
        g = _random_function(C2, rng)
        P = _random_point(C2, rng)
        assert (C2.valuation(f * g, P)
                == C2.valuation(f, P) + C2.valuation(g, P))


def test_valuation_ultrametric():
    rng = random.Random(11)
    for _ in range(60):
        f = _random_function(C2, rng)
        g = _random_function(C2, rng)
        if (f + g).is_zero():
            continue
        P = _random_point(C2, rng)
        assert C2.valuation(f + g, P) >= min(C2.valuation(f, P),
                                             C2.valuation(g, P))


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def test_series_squares_to_f():
    # y expanded at a branch point must satisfy y^2 = f(x) exactly
    W1 = C2.branch_point(Fraction(1))
    cut = 9
    ys = C2.y_series_at(W1, cut)
    xs = C2.x_series_at_branch(Fraction(1), cut)
    lhs = ys * ys
    # f(x(t)) via Horner on the shifted polynomial
    rhs = None
    for c in reversed(polyq.shift(C2.f, Fraction(1))):
        rhs = xs.scale(0) if rhs is None else rhs * xs
        from plurisusy.series import TSeries
        rhs = rhs + TSeries.from_poly_coeffs([c], min(cut, rhs.cut))
    for k in range(min(lhs.cut, rhs.cut)):
        assert lhs.coeff(k) == rhs.coeff(k)


def test_series_at_infinity_squares_to_f():
    cut = 3
    ys = C2.y_series_at_infinity(cut)
    assert ys.first_nonzero() == -5
    sq = ys * ys
    # f(t^-2) has lowest term t^-10 with coefficient lead(f) = 1
    assert sq.first_nonzero() == -10
    assert sq.coeff(-10) == 1


def test_laurent_matches_evaluate():
    rng = random.Random(12)
    for _ in range(40):
        f = _random_function(C2, rng)
        P = _random_point(C2, rng)
        if C2.valuation(f, P) < 0:
            continue
        s = C2.laurent_at(f, P, nterms=1)
        assert s.coeff(0) == C2.evaluate(f, P)


def test_laurent_leading_term_at_requested_depth():
    f = C2.y_fn() / C2.x_fn()
    W0 = C2.branch_point(Fraction(0))
    s = C2.laurent_at(f, W0, nterms=3)
    assert s.first_nonzero() == -1
    assert s.cut >= 2


def test_evaluate_pole_raises():
    inf = C2.infinity()
    with pytest.raises(ZeroDivisionError):
        C2.evaluate(C2.x_fn(), inf)


# ---------------------------------------------------------------------------
# function field arithmetic
# ---------------------------------------------------------------------------


def test_field_axioms_random():
    rng = random.Random(13)
    for _ in range(60):
        f = _random_function(C2, rng)
        g = _random_function(C2, rng)
        h = _random_function(C2, rng)
        assert f * (g + h) == f * g + f * h
        assert (f - f).is_zero()
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)


def test_inverse_and_norm():
    rng = random.Random(14)
    one = C2.one_fn()
    for _ in range(40):
        f = _random_function(C2, rng)
        assert f * f.inverse() == one
        n = f.norm_fn()
        assert not n.B  # the norm is a rational function of x alone
        assert f * f.conj() == n


def test_relation_y_squared_is_f():
    y = C2.y_fn()
    fx = C2.function(C2.f)
    assert y * y == fx


# ---------------------------------------------------------------------------
# principal divisors
# ---------------------------------------------------------------------------


def test_divisor_of_x():
    W0 = C2.branch_point(Fraction(0))
    inf = C2.infinity()
    D = C2.divisor_of(C2.x_fn())
    assert D == Divisor({W0: 2, inf: -2})


def test_divisor_of_y():
    inf = C2.infinity()
    D = C2.divisor_of(C2.y_fn())
    expect = Divisor({W: 1 for W in C2.rational_branch_points()})
    expect = expect + Divisor({inf: -5})
    assert D == expect


def test_divisor_degree_zero_random():
    rng = random.Random(15)
    count = 0
    while count < 100:
        f = _random_function(C2, rng)
        try:
            D = C2.divisor_of(f)
        except UnrepresentableSupportError:
            continue
        assert D.degree() == 0
        count += 1


def test_divisor_of_product_random():
    rng = random.Random(16)
    count = 0
    while count < 30:
        f = _random_function(C2, rng)
        g = _random_function(C2, rng)
        try:
            Df = C2.divisor_of(f)
            Dg = C2.divisor_of(g)
            Dfg = C2.divisor_of(f * g)
        except UnrepresentableSupportError:
            continue
        assert Dfg == Df + Dg
        count += 1


def test_irrational_support_raises():
    # x^2 - 2 vanishes at x = +-sqrt(2)
    fn = C2.function(polyq.poly([Fraction(-2), Fraction(0), Fraction(1)]))
    with pytest.raises(UnrepresentableSupportError):
        C2.divisor_of(fn)


def test_divisor_arithmetic():
    inf = C2.infinity()
    W0 = C2.branch_point(Fraction(0))
    D = Divisor({W0: 3, inf: -1})
    E = Divisor.of_point(W0) + Divisor.of_point(inf, 2)
    assert (D + E)[W0] == 4
    assert (D - E)[inf] == -3
    assert (-D).degree() == -2
    assert 2 * Divisor.of_point(W0) == Divisor({W0: 2})
    assert not D.is_effective()
    assert E.is_effective()
