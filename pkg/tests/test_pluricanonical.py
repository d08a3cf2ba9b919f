"""Rank pairs, very-ampleness thresholds, models, and superpoint families."""

import random
from fractions import Fraction

import pytest

from plurisusy.curve import Divisor, standard_curve
from plurisusy.pluricanonical import (SuperPointFamily, ThresholdCell,
                                      build_model,
                                      canonical_nonembedding_demo,
                                      criterion_local_freeness, minimal_nu,
                                      pluri_canonical_rank,
                                      pushforward_over_superpoint,
                                      random_deformation, threshold_table,
                                      verify_embedding, very_ample_check)
from plurisusy.riemann_roch import (DivisorClass, canonical_class, h0, h1,
                                    parity_representatives,
                                    reduce_weierstrass, rr_space,
                                    theta_from_subset)
from plurisusy.supercurve import RankPair, make_split_supercurve

C2 = standard_curve(2)
EV2, OD2 = parity_representatives(C2)
X2E = make_split_supercurve(C2, EV2)
X2O = make_split_supercurve(C2, OD2)
XW0 = make_split_supercurve(C2, theta_from_subset(C2, (0,)))


def _supercurves(g):
    curve = standard_curve(g)
    ev, od = parity_representatives(curve)
    return make_split_supercurve(curve, ev), make_split_supercurve(curve, od)


# ---------------------------------------------------------------------------
# rank pairs
# ---------------------------------------------------------------------------


def test_rank_genus2_nu5():
    r = pluri_canonical_rank(X2E, 5)
    assert r.rank == RankPair(5, 4)
    assert r.hypotheses_hold
    assert str(r).startswith("5|4")


def test_rank_low_nu_point_base():
    r = pluri_canonical_rank(X2E, 1)
    assert r.rank == RankPair(0, 2)
    assert not r.hypotheses_hold
    assert "hypotheses fail" in r.note
    assert str(r).startswith("0|2")


def test_rank_nu3():
    r = pluri_canonical_rank(X2E, 3)
    assert r.rank == RankPair(3, 2)


def test_rank_rejects_bad_nu():
    with pytest.raises(ValueError):
        pluri_canonical_rank(X2E, 0)


def test_rank_independent_of_theta_for_high_nu():
    for nu in (3, 4, 5):
        assert (pluri_canonical_rank(X2E, nu).rank
                == pluri_canonical_rank(X2O, nu).rank
                == pluri_canonical_rank(XW0, nu).rank)


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("nu", [3, 4, 5, 6])
def test_rank_against_closed_form(g, nu):
    """Two derivations must agree: exact rr_space kernels versus the
    Riemann-Roch closed form deg - g + 1 (valid since both summand degrees
    exceed 2g - 2 for nu >= 3)."""
    Xe, _ = _supercurves(g)
    r = pluri_canonical_rank(Xe, nu)
    lo = (nu - 1) * (g - 1)   # h0 of the nu-th power
    hi = nu * (g - 1)         # h0 of the (nu+1)-st power
    expect = RankPair(lo, hi) if nu % 2 == 0 else RankPair(hi, lo)
    assert r.rank == expect
    assert r.hypotheses_hold


@pytest.mark.parametrize("nu", [3, 4, 5, 6])
def test_rank_formula_annotation(nu):
    """The printed companion formula pair differs from the derived rank in
    the (nu+1)-summand slot for every nu >= 2, so the annotation must
    always be flagged."""
    r = pluri_canonical_rank(X2E, nu)
    assert r.formula_differs
    assert "alt formula" in str(r)
    # the nu-summand slot of the companion formula agrees with the rank
    g = 2
    f_lo = (nu - 1) * g - nu + 1
    if nu % 2 == 0:
        assert r.formula.even == f_lo == r.rank.even
    else:
        assert r.formula.odd == f_lo == r.rank.odd


# ---------------------------------------------------------------------------
# local freeness certificates
# ---------------------------------------------------------------------------


def test_local_freeness_high_power_passes():
    E = 3 * X2E.L
    cert = criterion_local_freeness(X2E, E, E_parity="odd")
    assert cert.passed
    assert cert.h1_E == cert.h1_EL == 0
    assert cert.rank == RankPair(h0(C2, reduce_weierstrass(C2, (4 * X2E.L).rep)),
                                 h0(C2, reduce_weierstrass(C2, (3 * X2E.L).rep)))


def test_local_freeness_trivial_class_fails():
    O = DivisorClass(C2, Divisor())
    cert = criterion_local_freeness(X2E, O)
    assert not cert.passed
    assert cert.h1_E == C2.genus  # h1(O) = g


def test_local_freeness_canonical_fails():
    K = canonical_class(C2)
    cert = criterion_local_freeness(X2E, K)
    assert not cert.passed
    assert cert.h1_E == 1


# ---------------------------------------------------------------------------
# very-ampleness
# ---------------------------------------------------------------------------


def test_very_ample_rejects_low_nu():
    with pytest.raises(ValueError):
        very_ample_check(X2E, 2)


def test_very_ample_g2_boundary():
    r3 = very_ample_check(XW0, 3)
    assert not r3.passed and not r3.condition1_ok
    r4 = very_ample_check(XW0, 4)
    assert not r4.passed
    P, Q = r4.witness
    assert P.at_infinity and Q.at_infinity
    assert r4.witness_str() == "x=y=Inf"
    r5 = very_ample_check(XW0, 5)
    assert r5.passed and r5.witness is None


def test_very_ample_g3_split_by_parity():
    Xe, Xo = _supercurves(3)
    assert very_ample_check(Xe, 3).passed
    ro = very_ample_check(Xo, 3)
    assert not ro.passed
    assert ro.witness is not None


def test_very_ample_witness_confirmed_by_rr():
    """Failure witnesses (P, Q) must make K - nu L + P + Q effective."""
    for X, nu in ((XW0, 3), (XW0, 4), (_supercurves(3)[1], 3)):
        rep = very_ample_check(X, nu)
        assert not rep.passed
        P, Q = rep.witness
        curve = X.curve
        K = canonical_class(curve).rep
        D = K - nu * X.L.rep + Divisor.of_point(P) + Divisor.of_point(Q)
        assert h0(curve, reduce_weierstrass(curve, D)) >= 1


def test_very_ample_passes_above_threshold():
    for g, nu in ((2, 5), (2, 6), (3, 4), (4, 3), (5, 3), (6, 3)):
        Xe, Xo = _supercurves(g)
        assert very_ample_check(Xe, nu).passed
        assert very_ample_check(Xo, nu).passed


# ---------------------------------------------------------------------------
# minimal nu and the threshold table
# ---------------------------------------------------------------------------


def test_minimal_nu_values():
    assert minimal_nu(2) == 5
    assert minimal_nu(3) == 4
    assert minimal_nu(4) == 3
    assert minimal_nu(5) == 3
    assert minimal_nu(6) == 3


def test_minimal_nu_this_theta():
    assert minimal_nu(3, quantifier="this-theta", theta="even") == 3
    assert minimal_nu(3, quantifier="this-theta", theta="odd") == 4
    assert minimal_nu(2, quantifier="this-theta",
                      theta=theta_from_subset(C2, (0,))) == 5


def test_minimal_nu_validation():
    with pytest.raises(ValueError):
        minimal_nu(1)
    with pytest.raises(ValueError):
        minimal_nu(3, quantifier="this-theta")
    with pytest.raises(ValueError):
        minimal_nu(3, quantifier="some-thetas")


def test_threshold_table_grid():
    cells = threshold_table(6, 6)
    assert len(cells) == 20
    for c in cells:
        should_pass = (c.g >= 4 or (c.g == 3 and c.nu >= 4)
                       or (c.g == 2 and c.nu >= 5))
        assert c.all_pass == should_pass, (c.g, c.nu)
        if not c.all_pass:
            assert c.witness is not None


def test_threshold_mixed_cell():
    cells = {(c.g, c.nu): c for c in threshold_table(3, 3)}
    c33 = cells[(3, 3)]
    assert c33.mixed
    assert c33.even_pass and not c33.odd_pass
    assert c33.verdict() == "FAIL(all-thetas): even PASS, odd FAIL"
    assert cells[(2, 3)].verdict() == "FAIL"


def test_threshold_parallel_matches_serial():
    serial = threshold_table(4, 5)
    parallel = threshold_table(4, 5, parallel=True)
    assert len(serial) == len(parallel)
    for a, b in zip(serial, parallel):
        assert (a.g, a.nu, a.even_pass, a.odd_pass) == \
               (b.g, b.nu, b.even_pass, b.odd_pass)
        assert a.witness == b.witness


# ---------------------------------------------------------------------------
# models
# ---------------------------------------------------------------------------


def test_build_model_g2_nu5():
    M = build_model(XW0, 5)
    assert M.ambient == RankPair(4, 4)
    assert [repr(s) for s in M.even_sections] == ["1", "x", "x^2", "x^3", "y"]
    assert [repr(s) for s in M.odd_sections] == ["1", "x", "x^2", "(y)/(x)"]
    assert repr(M.cleared_divisors["even"]) == "6*Inf"
    assert repr(M.cleared_divisors["odd"]) == "(0, 0) + 4*Inf"


def test_build_model_g4_nu3():
    Xe, _ = _supercurves(4)
    M = build_model(Xe, 3)
    assert M.ambient == RankPair(8, 6)


def test_build_model_refuses_below_threshold():
    with pytest.raises(ValueError):
        build_model(XW0, 4)


def test_build_model_sections_match_cleared_divisors():
    M = build_model(XW0, 5)
    for key, sections in (("even", M.even_sections),
                          ("odd", M.odd_sections)):
        D = M.cleared_divisors[key]
        for s in sections:
            assert (C2.divisor_of(s) + D).is_effective()


def test_verify_embedding_passes():
    M = build_model(XW0, 5)
    rep = verify_embedding(M, samples=40, seed=2)
    assert rep.all_pass
    assert rep.summary() == "all checks pass"
    assert rep.pairs_checked == 40


def test_verify_embedding_deterministic():
    M = build_model(XW0, 5)
    a = verify_embedding(M, samples=15, seed=9)
    b = verify_embedding(M, samples=15, seed=9)
    assert a.pairs_checked == b.pairs_checked
    assert a.points_checked == b.points_checked
    assert a.all_pass and b.all_pass


def test_verify_embedding_explicit_points():
    M = build_model(XW0, 5)
    pts = [C2.infinity(), C2.branch_point(Fraction(0)),
           C2.point(Fraction(-1)), C2.point(Fraction(5), sign=-1)]
    rep = verify_embedding(M, samples=pts)
    assert rep.all_pass
    assert rep.points_checked == 4
    assert rep.pairs_checked == 6  # all unordered pairs


def test_forced_model_fails_at_witness():
    rep4 = very_ample_check(XW0, 4)
    P, Q = rep4.witness
    M4 = build_model(XW0, 4, force=True)
    assert M4.ambient == RankPair(2, 4)
    check = verify_embedding(M4, samples=[P, Q], seed=0)
    assert not check.all_pass
    assert P in check.tangent_failures  # P = Q = infinity


# ---------------------------------------------------------------------------
# superpoint families
# ---------------------------------------------------------------------------


def test_family_validates_pole_support():
    x = C2.x_fn()
    with pytest.raises(ValueError):
        # pole above x = 2 is away from the chart overlap {W0, inf}
        SuperPointFamily(X2E, (x - 2).inverse())
    # pole at W0 and infinity is fine
    SuperPointFamily(X2E, C2.y_fn() / x)


def test_family_rejects_irrational_poles():
    from plurisusy import polyq
    den = polyq.poly([Fraction(-2), Fraction(0), Fraction(1)])  # x^2 - 2
    fn = C2.function(polyq.ONE, polyq.ZERO, den).inverse().inverse()
    with pytest.raises(ValueError):
        SuperPointFamily(X2E, fn)


def test_random_deformation_seeded():
    h1 = random_deformation(C2, seed=42)
    h2 = random_deformation(C2, seed=42)
    assert h1 == h2
    assert not h1.is_zero()


def test_pushforward_trivial_deformation():
    rep = pushforward_over_superpoint(SuperPointFamily(X2E, 0), 3)
    assert rep.free
    assert rep.rank == RankPair(3, 2)
    assert rep.drop_even == rep.drop_odd == 0


def test_pushforward_free_above_two():
    rng = random.Random(26)
    for g, nu in ((2, 3), (3, 4)):
        Xe, _ = _supercurves(g)
        for _ in range(5):
            h = random_deformation(Xe.curve, rng=rng)
            rep = pushforward_over_superpoint(SuperPointFamily(Xe, h), nu)
            assert rep.free
            assert rep.rank == pluri_canonical_rank(Xe, nu).rank
            assert str(rep) == f"free, rank {rep.rank}"


def test_pushforward_obstruction_at_nu1():
    h = random_deformation(C2, seed=7)
    rep = pushforward_over_superpoint(SuperPointFamily(X2E, h), 1,
                                      allow_low_nu=True)
    assert not rep.free
    assert (rep.drop_even, rep.drop_odd) == (1, 0)
    assert rep.rank == RankPair(0, 2)
    assert not rep.hypotheses_hold
    assert "not free" in str(rep)


def test_pushforward_guards_low_nu():
    with pytest.raises(ValueError):
        pushforward_over_superpoint(SuperPointFamily(X2E, 0), 2)
    with pytest.raises(ValueError):
        pushforward_over_superpoint(SuperPointFamily(X2E, 0), 0,
                                    allow_low_nu=True)


# ---------------------------------------------------------------------------
# the first-power demonstration
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("g", [2, 3, 4])
def test_nonembedding_demo_even_theta(g):
    Xe, _ = _supercurves(g)
    demo = canonical_nonembedding_demo(Xe)
    assert demo.rank == RankPair(0, g)
    assert demo.h0_L == 0
    assert demo.obstruction is not None
    assert f"P^(-1|{g})" in demo.obstruction


def test_nonembedding_demo_odd_theta_silent():
    demo = canonical_nonembedding_demo(X2O)
    assert demo.rank == RankPair(1, 2)
    assert demo.h0_L == 1
    assert demo.obstruction is None
