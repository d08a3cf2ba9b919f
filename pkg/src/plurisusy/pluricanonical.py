"""Powers of the Berezinian bundle on a split supercurve.

The direct image of the nu-th power splits into the section spaces of
L^nu and L^(nu+1) on the underlying curve; everything here is exact
linear algebra on those spaces: rank pairs, very-ampleness with explicit
witness pairs, projective models and their separation checks, and the
section module of a first-order deformation over a 0|1-dimensional base.
"""

from __future__ import annotations

import random
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import polyq
from .curve import (CurvePoint, Divisor, FunctionFieldElement,
                    HyperellipticCurve, UnrepresentableSupportError,
                    standard_curve)
from .fieldext import rows_independent
from .graded_algebra import GrassmannAlgebra
from .linalg import ColumnSpace
from .riemann_roch import (DivisorClass, ThetaCharacteristic, branch_roots,
                           canonical_divisor, h0, parity_representatives,
                           reduce_weierstrass, rr_space)
from .supercurve import RankPair, SplitSupercurve, make_split_supercurve


def _power_divisor(X: SplitSupercurve, k: int) -> Divisor:
    return reduce_weierstrass(X.curve, k * X.L.rep)


@dataclass(frozen=True)
class RankReport:
    """Rank pair of the direct image, with the hypothesis flag and the
    closed-form pair printed alongside it."""

    nu: int
    rank: RankPair
    hypotheses_hold: bool
    formula: RankPair
    note: str = ""

    @property
    def formula_differs(self) -> bool:
        return self.formula != self.rank

    def __str__(self):
        if self.note:
            return f"{self.rank} ({self.note})"
        if self.formula_differs:
            return f"{self.rank} (alt formula: {self.formula}; differs)"
        return str(self.rank)


def pluri_canonical_rank(X: SplitSupercurve, nu: int) -> RankReport:
    """Rank pair of the direct image of the nu-th Berezinian power.

    The two graded pieces are the section spaces of L^nu and L^(nu+1);
    the L^nu piece carries the parity of nu since the bundle itself is
    odd.  When h1 of both summands vanishes (exactly nu >= 3, by degree)
    the pair is base-independent and is ordered by that parity.  For
    nu <= 2 the hypotheses fail and the returned pair is the literal
    section count over a point, in summand order h0(L^nu) | h0(L^(nu+1)).

    `formula` is the closed-form pair with (nu-1)g - nu + 1 in the L^nu
    slot and (2nu-1)g - 2nu + 1 in the L^(nu+1) slot; the second entry
    disagrees with the computed value for every nu >= 2.
    """
    if nu < 1:
        raise ValueError("nu must be at least 1")
    curve = X.curve
    g = curve.genus
    K = canonical_divisor(curve)
    D_nu = _power_divisor(X, nu)
    D_nu1 = _power_divisor(X, nu + 1)
    h0_nu = h0(curve, D_nu)
    h0_nu1 = h0(curve, D_nu1)
    h1_nu = h0(curve, reduce_weierstrass(curve, K - D_nu))
    h1_nu1 = h0(curve, reduce_weierstrass(curve, K - D_nu1))
    hyp = h1_nu == 0 and h1_nu1 == 0

    f_lo = (nu - 1) * g - nu + 1
    f_hi = (2 * nu - 1) * g - 2 * nu + 1
    formula = RankPair(f_lo, f_hi) if nu % 2 == 0 else RankPair(f_hi, f_lo)

    if hyp:
        rank = RankPair(h0_nu, h0_nu1) if nu % 2 == 0 else RankPair(h0_nu1, h0_nu)
        return RankReport(nu, rank, True, formula)
    return RankReport(nu, RankPair(h0_nu, h0_nu1), False, formula,
                      note="hypotheses fail; point-base value")


@dataclass(frozen=True)
class FreenessCertificate:
    """The four cohomology numbers behind a local-freeness decision."""

    h0_E: int
    h0_EL: int
    h1_E: int
    h1_EL: int
    rank: RankPair
    passed: bool


def criterion_local_freeness(X: SplitSupercurve, E_class: DivisorClass,
                             E_parity: str = "even") -> FreenessCertificate:
    """Local-freeness test for the direct image of an arbitrary class E
    on the underlying curve (the susy structure never enters): both h1(E)
    and h1(E + L) must vanish.  The rank pair is h0(E) | h0(E + L) when E
    is declared even, swapped when odd."""
    if E_parity not in ("even", "odd"):
        raise ValueError("E_parity must be 'even' or 'odd'")
    curve = X.curve
    K = canonical_divisor(curve)
    E = E_class.rep
    EL = E + X.L.rep
    h0_E = h0(curve, reduce_weierstrass(curve, E))
    h0_EL = h0(curve, reduce_weierstrass(curve, EL))
    h1_E = h0(curve, reduce_weierstrass(curve, K - E))
    h1_EL = h0(curve, reduce_weierstrass(curve, K - EL))
    passed = h1_E == 0 and h1_EL == 0
    if E_parity == "even":
        rank = RankPair(h0_E, h0_EL)
    else:
        rank = RankPair(h0_EL, h0_E)
    return FreenessCertificate(h0_E, h0_EL, h1_E, h1_EL, rank, passed)


@dataclass(frozen=True)
class VeryAmpleReport:
    nu: int
    passed: bool
    condition1_ok: bool
    condition2_ok: bool
    witness: Optional[Tuple[CurvePoint, CurvePoint]]
    note: str = ""

    def witness_str(self) -> str:
        if self.witness is None:
            return ""
        P, Q = self.witness
        if P == Q:
            return f"x=y={P!r}"
        return f"x={P!r}, y={Q!r}"


def _effective_points(curve: HyperellipticCurve, rep: Divisor,
                      degree: int) -> Optional[List[CurvePoint]]:
    """Points (with multiplicity) of an effective divisor linearly
    equivalent to rep, or None when the class has no sections."""
    basis = rr_space(curve, rep)
    if not basis:
        return None
    T = None
    for b in basis:
        try:
            T = curve.divisor_of(b) + rep
        except UnrepresentableSupportError:
            continue
        break
    if T is None:
        raise UnrepresentableSupportError(
            "no section of the class has representable zeros")
    assert T.is_effective() and T.degree() == degree
    pts: List[CurvePoint] = []
    for P, n in T.items():
        pts.extend([P] * n)
    return pts


def very_ample_check(X: SplitSupercurve, nu: int) -> VeryAmpleReport:
    """Separation test for the nu-th power of the Berezinian bundle.

    Condition 1 (point pairs, tangent vectors at x = y): fails exactly
    when K - L^nu + x + y is effective for some points x, y.  Condition 2
    (odd directions): the same with a single point against the summand of
    the other parity.  Degrees settle both except when the residual
    degree is 0, 1 or 2, where effectivity of the residual class is
    decided by an exact section-space computation and a failure comes
    with an explicit witness pair."""
    if nu < 3:
        raise ValueError("need nu >= 3 so that the rank hypotheses hold")
    curve = X.curve
    g = curve.genus
    K = canonical_divisor(curve)
    Lrep = X.L.rep

    cond1_ok = True
    witness: Optional[Tuple[CurvePoint, CurvePoint]] = None
    note = ""
    d1 = (2 * g - 2) - nu * (g - 1) + 2
    if d1 < 0:
        pass
    elif d1 == 0:
        # K - L^nu + x + y sweeps the degree-0 classes T - x - y with
        # T in |L^nu - K|; effectivity of that degree-2 class decides.
        rep = reduce_weierstrass(curve, nu * Lrep - K)
        pts = _effective_points(curve, rep, 2)
        if pts is not None:
            cond1_ok = False
            witness = (pts[0], pts[1])
            note = "K - L^nu + x + y is effective at the witness pair"
    elif d1 == 1 and g == 2:
        # Residual degree 1: place the leftover point at infinity; on a
        # genus-2 curve every degree-2 class is effective, so this always
        # produces a witness pair.
        rep = reduce_weierstrass(
            curve, nu * Lrep - K + Divisor.of_point(curve.infinity()))
        pts = _effective_points(curve, rep, 2)
        assert pts is not None, "degree-2 classes on genus 2 are effective"
        cond1_ok = False
        witness = (pts[0], pts[1])
        note = "K - L^nu + x + y is effective at the witness pair"
    else:
        raise RuntimeError(f"unexpected residual degree {d1} at genus {g}")

    # The other summand against a single point.
    m2 = nu + 1 if nu % 2 == 0 else nu
    cond2_ok = True
    d2 = (2 * g - 2) - m2 * (g - 1) + 1
    if d2 < 0:
        pass
    elif d2 == 0:
        rep2 = reduce_weierstrass(curve, m2 * Lrep - K)
        pts2 = _effective_points(curve, rep2, 1)
        if pts2 is not None:
            cond2_ok = False
            if witness is None:
                witness = (pts2[0], pts2[0])
                note = "K - M + x is effective for the odd-direction summand"
    else:
        raise RuntimeError(f"unexpected residual degree {d2} at genus {g}")

    return VeryAmpleReport(nu, cond1_ok and cond2_ok, cond1_ok, cond2_ok,
                           witness, note)


def minimal_nu(g: int, quantifier: str = "all-thetas",
               theta: Union[None, str, ThetaCharacteristic] = None) -> int:
    """Smallest nu >= 3 whose Berezinian power passes very_ample_check.

    Under "all-thetas" the check runs on the h0 = 0 and h0 = 1
    representatives, which covers every theta characteristic: the
    boundary verdicts depend on the theta only through whether
    h0(L) >= 1.  Under "this-theta" pass a ThetaCharacteristic, or
    "even"/"odd" to pick the representative of that parity."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    if quantifier == "all-thetas":
        curve = standard_curve(g)
        even, odd = parity_representatives(curve)
        pairs = [(curve, even), (curve, odd)]
    elif quantifier == "this-theta":
        if theta is None:
            raise ValueError("this-theta quantification needs a theta")
        if isinstance(theta, str):
            curve = standard_curve(g)
            even, odd = parity_representatives(curve)
            pairs = [(curve, {"even": even, "odd": odd}[theta])]
        else:
            pairs = [(theta.cls.curve, theta)]
    else:
        raise ValueError(f"unknown quantifier {quantifier!r}")
    models = [make_split_supercurve(c, th) for c, th in pairs]
    for nu in range(3, 8):
        if all(very_ample_check(Xr, nu).passed for Xr in models):
            return nu
    raise RuntimeError("no nu up to 7 passes; unreachable for genus >= 2")


@dataclass(frozen=True)
class ThresholdCell:
    g: int
    nu: int
    even_pass: bool
    odd_pass: bool
    witness: Optional[Tuple[CurvePoint, CurvePoint]]

    @property
    def all_pass(self) -> bool:
        return self.even_pass and self.odd_pass

    @property
    def mixed(self) -> bool:
        return self.even_pass != self.odd_pass

    def verdict(self) -> str:
        if self.all_pass:
            return "PASS"
        if self.mixed:
            even = "PASS" if self.even_pass else "FAIL"
            odd = "PASS" if self.odd_pass else "FAIL"
            return f"FAIL(all-thetas): even {even}, odd {odd}"
        return "FAIL"


def threshold_table(g_max: int = 6, nu_max: int = 6,
                    parallel: bool = False) -> List[ThresholdCell]:
    """Very-ampleness grid over 2 <= g <= g_max, 3 <= nu <= nu_max,
    quantified over theta characteristics through the parity
    representatives.  Cells are pure, so they may be evaluated
    concurrently; results are collected in fixed cell order either way
    and are identical to the serial run."""
    jobs = []
    for g in range(2, g_max + 1):
        curve = standard_curve(g)
        even, odd = parity_representatives(curve)
        Xe = make_split_supercurve(curve, even)
        Xo = make_split_supercurve(curve, odd)
        for nu in range(3, nu_max + 1):
            jobs.append((g, nu, Xe, Xo))

    def cell(job):
        g, nu, Xe, Xo = job
        re_ = very_ample_check(Xe, nu)
        ro = very_ample_check(Xo, nu)
        witness = re_.witness if not re_.passed else ro.witness
        return ThresholdCell(g, nu, re_.passed, ro.passed, witness)

    if parallel:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(cell, jobs))
    return [cell(j) for j in jobs]


@dataclass(frozen=True, eq=False)
class PluriCanonicalModel:
    """Projective model of a split supercurve: a point (z, theta) maps to
    [s_0(z) : ... : s_p(z) | theta t_1(z) : ... : theta t_q(z)] where the
    s_i span the even summand's sections and the t_j the odd summand's,
    each trivialized by clearing the recorded divisor."""

    curve: HyperellipticCurve
    nu: int
    ambient: RankPair
    even_sections: Tuple[FunctionFieldElement, ...]
    odd_sections: Tuple[FunctionFieldElement, ...]
    cleared_divisors: Dict[str, Divisor]

    def __post_init__(self):
        assert len(self.even_sections) == self.ambient.even + 1
        assert len(self.odd_sections) == self.ambient.odd


def build_model(X: SplitSupercurve, nu: int,
                force: bool = False) -> PluriCanonicalModel:
    """Model of X by the sections of the nu-th Berezinian power.

    The even coordinates come from the summand of even parity (L^nu for
    even nu, L^(nu+1) for odd nu) and the odd coordinates from the other
    summand.  Raises when the very-ampleness check fails; `force` skips
    that gate so deliberately failing models can be built and fed to
    verify_embedding."""
    report = very_ample_check(X, nu)
    if not report.passed and not force:
        raise ValueError(
            f"power {nu} is not very ample ({report.note}; "
            f"witness {report.witness_str()})")
    curve = X.curve
    k_even = nu if nu % 2 == 0 else nu + 1
    k_odd = nu + 1 if nu % 2 == 0 else nu
    D_even = _power_divisor(X, k_even)
    D_odd = _power_divisor(X, k_odd)
    even_sections = tuple(rr_space(curve, D_even))
    odd_sections = tuple(rr_space(curve, D_odd))
    ambient = RankPair(len(even_sections) - 1, len(odd_sections))
    return PluriCanonicalModel(curve, nu, ambient, even_sections,
                               odd_sections, {"even": D_even, "odd": D_odd})


def _jet_rows(curve: HyperellipticCurve,
              sections: Sequence[FunctionFieldElement], D: Divisor,
              P: CurvePoint, nterms: int) -> List[List]:
    """Laurent coefficient rows of the sections at P in the local
    trivialization of the D-twisted bundle: row k lists the t^(m+k)
    coefficients with m = -D[P], so the fiber evaluation is row 0."""
    m = -D[P]
    rows: List[List] = [[] for _ in range(nterms)]
    for s in sections:
        q = curve.laurent_at(s, P, nterms=nterms)
        for k in range(nterms):
            rows[k].append(q.coeff(m + k))
    return rows


@dataclass(eq=False)
class EmbeddingReport:
    model: PluriCanonicalModel
    pairs_checked: int
    points_checked: int
    pair_failures: List[Tuple[CurvePoint, CurvePoint]]
    tangent_failures: List[CurvePoint]
    odd_failures: List[CurvePoint]

    @property
    def all_pass(self) -> bool:
        return not (self.pair_failures or self.tangent_failures
                    or self.odd_failures)

    def summary(self) -> str:
        if self.all_pass:
            return "all checks pass"
        return (f"{len(self.pair_failures)} pair, "
                f"{len(self.tangent_failures)} tangent, "
                f"{len(self.odd_failures)} odd-direction failures")


def _sample_pool(curve: HyperellipticCurve, rng: random.Random,
                 n: int) -> List[CurvePoint]:
    """Deterministic mix of special and random points: infinity and the
    branch points show up with fixed probability, the rest are rational-x
    points whose y lives in Q or in a real quadratic extension."""
    specials = [curve.infinity()] + curve.rational_branch_points()
    pool: List[CurvePoint] = []
    while len(pool) < n:
        if rng.random() < 0.15:
            pool.append(specials[rng.randrange(len(specials))])
            continue
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
        if polyq.eval_at(curve.f, x) == 0:
            pool.append(curve.branch_point(x))
            continue
        pool.append(curve.point(x, sign=rng.choice((1, -1))))
    return pool


def verify_embedding(M: PluriCanonicalModel,
                     samples: Union[int, Sequence[CurvePoint]] = 100,
                     seed: int = 0) -> EmbeddingReport:
    """Exact separation checks for a model.

    (a) distinct sample points get independent even-coordinate value
    rows (rank 2); (b) at every sample point the value row and the first
    derivative row are independent, so the map is an immersion there;
    (c) the odd-coordinate value row never vanishes.  A pair with equal
    members runs check (b) in place of (a).  Rows are scaled Laurent
    coefficients, so points on the cleared divisors are fine.  An integer
    `samples` draws that many point pairs deterministically from `seed`;
    a point list checks all pairs from the list."""
    curve = M.curve
    D_even = M.cleared_divisors["even"]
    D_odd = M.cleared_divisors["odd"]
    if isinstance(samples, int):
        rng = random.Random(seed)
        pool = _sample_pool(curve, rng, 2 * samples)
        pairs = [(pool[2 * i], pool[2 * i + 1]) for i in range(samples)]
        pts = pool
    else:
        pts = list(samples)
        pairs = [(pts[i], pts[j])
                 for i in range(len(pts)) for j in range(i + 1, len(pts))]

    points: List[CurvePoint] = []
    seen = set()
    for P in pts:
        if P not in seen:
            seen.add(P)
            points.append(P)

    jets: Dict[CurvePoint, Tuple[List, List, List]] = {}

    def jet(P: CurvePoint) -> Tuple[List, List, List]:
        if P not in jets:
            r0, r1 = _jet_rows(curve, M.even_sections, D_even, P, 2)
            (ro,) = _jet_rows(curve, M.odd_sections, D_odd, P, 1)
            jets[P] = (r0, r1, ro)
        return jets[P]

    pair_failures: List[Tuple[CurvePoint, CurvePoint]] = []
    tangent_failures: List[CurvePoint] = []
    odd_failures: List[CurvePoint] = []
    for P in points:
        r0, r1, ro = jet(P)
        if not rows_independent(r0, r1):
            tangent_failures.append(P)
        if all(c == 0 for c in ro):
            odd_failures.append(P)
    for P, Q in pairs:
        if P == Q:
            continue  # covered by the tangent check at P
        if not rows_independent(jet(P)[0], jet(Q)[0]):
            pair_failures.append((P, Q))

    return EmbeddingReport(M, len(pairs), len(points), pair_failures,
                           tangent_failures, odd_failures)


class SuperPointFamily:
    """Family over the 0|1-dimensional base Lambda[eta]: the split fiber
    with the transition of each pushforward summand twisted by
    (1 + eta h) across the cover {C minus infinity, C minus W}, where W
    is the first finite branch point.  Setting eta = 0 gives back the
    split fiber on the nose; h must be regular on the chart overlap."""

    __slots__ = ("base", "fiber", "deformation", "chart_point")

    def __init__(self, fiber: SplitSupercurve,
                 deformation: FunctionFieldElement):
        curve = fiber.curve
        W = curve.rational_branch_points()[0]
        h = deformation
        if not isinstance(h, FunctionFieldElement):
            h = curve.one_fn() * h
        if h.curve is not curve:
            raise ValueError("deformation lives on a different curve")
        if not h.is_zero():
            # Finite poles sit above roots of den.  Normal form keeps den
            # coprime to gcd(A, B), so an irrational den root is a genuine
            # pole on at least one sheet; rational roots are checked by
            # exact valuation.
            roots, cof = polyq.rational_roots(h.den)
            if polyq.deg(cof) > 0:
                raise ValueError(
                    "deformation cochain has poles at irrational "
                    "x-coordinates, away from the chart overlap")
            for r, _m in roots:
                if polyq.eval_at(curve.f, r) == 0:
                    above = [curve.branch_point(r)]
                else:
                    above = [curve.point(r, sign=1), curve.point(r, sign=-1)]
                for P in above:
                    if curve.valuation(h, P) < 0 and P != W:
                        raise ValueError(
                            f"deformation cochain has a pole at {P!r}, "
                            f"away from the chart overlap")
        self.base = GrassmannAlgebra(("eta",))
        self.fiber = fiber
        self.deformation = h
        self.chart_point = W

    def __repr__(self):
        return (f"SuperPointFamily(base=0|1, fiber genus {self.fiber.genus}, "
                f"h={self.deformation!r})")


def random_deformation(curve: HyperellipticCurve, rng=None,
                       seed=None) -> FunctionFieldElement:
    """Random overlap-regular cochain: a nonzero small-integer combination
    of a basis of the functions with poles of order at most 3 at W and at
    infinity."""
    if rng is None:
        rng = random.Random(seed)
    W = curve.rational_branch_points()[0]
    basis = rr_space(curve, Divisor({W: 3, curve.infinity(): 3}))
    while True:
        coeffs = [rng.randint(-5, 5) for _ in basis]
        if any(coeffs):
            break
    h = curve.zero_fn()
    for c, b in zip(coeffs, basis):
        if c:
            h = h + b * Fraction(c)
    return h


@dataclass(frozen=True)
class _CechFrame:
    den: tuple
    capA: int
    capB: int
    space: ColumnSpace


def _cech_frame(curve: HyperellipticCurve, D: Divisor, W: CurvePoint,
                N: int) -> _CechFrame:
    """Echelonized span of the two chart section spaces inside the
    overlap space, in a fixed polynomial coordinate frame.  Cached per
    (divisor, chart point, truncation); the cache is what lets many
    deformation cochains reuse one reduction."""
    key = (D.key(), W.x, N)
    cached = curve._echelon_cache.get(key)
    if cached is not None:
        return cached
    inf = curve.infinity()
    b0 = rr_space(curve, D + Divisor({inf: N}))
    b1 = rr_space(curve, D + Divisor({W: N}))
    big = D + Divisor({inf: N, W: N})

    need = defaultdict(int)
    for P, m in big.items():
        if P.at_infinity or m <= 0:
            continue
        e = (m + 1) // 2 if P.is_branch() else m
        need[P.x] = max(need[P.x], e)
    den = polyq.ONE
    for x0 in sorted(need):
        den = polyq.mul(den, polyq.pow_(polyq.poly([-x0, 1]), need[x0]))

    V = big[inf] + 2 * polyq.deg(den)
    capA = max(0, V // 2 + 1)
    capB = max(0, (V - (2 * curve.genus + 1)) // 2 + 1)
    frame = _CechFrame(den, capA, capB, ColumnSpace(capA + capB))
    for b in b0 + b1:
        frame.space.add(_frame_coords(frame, b))
    curve._echelon_cache[key] = frame
    return frame


def _frame_coords(frame: _CechFrame, u: FunctionFieldElement) -> List[Fraction]:
    """Coordinates of u in the frame: coefficients of A and B after
    clearing to the common denominator, padded to the degree caps."""
    factor = polyq.exact_div(frame.den, u.den)
    A = polyq.mul(u.A, factor)
    B = polyq.mul(u.B, factor)
    if polyq.deg(A) >= frame.capA or polyq.deg(B) >= frame.capB:
        raise RuntimeError("truncation bound exceeded: pole profile "
                           "does not fit the coordinate frame")
    row = [Fraction(0)] * (frame.capA + frame.capB)
    for i, c in enumerate(A):
        row[i] = c
    for i, c in enumerate(B):
        row[frame.capA + i] = c
    return row


def _eta_drop(curve: HyperellipticCurve, D: Divisor, W: CurvePoint,
              h: FunctionFieldElement, N: int) -> int:
    """Rank of the eta-obstruction for one summand: the images h * a_k of
    a basis of L(D), reduced against the span of the two chart section
    spaces truncated at pole order N."""
    a = rr_space(curve, D)
    if not a or h.is_zero():
        return 0
    frame = _cech_frame(curve, D, W, N)
    residual = ColumnSpace(frame.capA + frame.capB)
    for ak in a:
        r = frame.space.reduce(_frame_coords(frame, h * ak))
        if any(c != 0 for c in r):
            residual.add(r)
    return residual.rank


@dataclass(frozen=True)
class SuperPointReport:
    nu: int
    free: bool
    rank: RankPair
    drop_even: int
    drop_odd: int
    hypotheses_hold: bool

    def __str__(self):
        state = "free" if self.free else (
            f"not free (drops {self.drop_even}|{self.drop_odd})")
        return f"{state}, rank {self.rank}"


def pushforward_over_superpoint(F: SuperPointFamily, nu: int,
                                allow_low_nu: bool = False
                                ) -> SuperPointReport:
    """Sections of the deformed nu-th Berezinian power over Lambda[eta].

    A section is a chart pair (f0 + eta f1, g0 + eta g1) matching as
    g = (1 + eta h) f on the overlap, so f0 = g0 is a global section of
    the summand and the eta-component exists iff h f0 lies in the span
    of the two chart section spaces.  The module is free exactly when no
    basis section obstructs; obstruction ranks are reported per summand.
    Candidate pole orders are truncated at N = deg + 2g + 2 and the
    computation is repeated at 2N; disagreement raises, so a returned
    answer is saturation-checked.  For nu >= 3 the rank pair equals
    pluri_canonical_rank of the fiber."""
    if nu < 1:
        raise ValueError("nu must be at least 1")
    if nu < 3 and not allow_low_nu:
        raise ValueError("the rank hypotheses need nu >= 3; "
                         "pass allow_low_nu=True to explore anyway")
    X = F.fiber
    curve = X.curve
    W = F.chart_point
    h = F.deformation

    k_even = nu if nu % 2 == 0 else nu + 1
    k_odd = nu + 1 if nu % 2 == 0 else nu
    drops: Dict[str, int] = {}
    for label, D in (("even", _power_divisor(X, k_even)),
                     ("odd", _power_divisor(X, k_odd))):
        N = D.degree() + 2 * curve.genus + 2
        if not h.is_zero():
            # the family constructor confined the poles to {W, infinity}
            worst = min(curve.valuation(h, W),
                        curve.valuation(h, curve.infinity()), 0)
            if -worst > N:
                raise RuntimeError("truncation bound exceeded: "
                                   "cochain pole order too large")
        d1 = _eta_drop(curve, D, W, h, N)
        d2 = _eta_drop(curve, D, W, h, 2 * N)
        if d1 != d2:
            raise RuntimeError("truncation bound exceeded: obstruction "
                               "rank did not saturate under doubling")
        drops[label] = d1

    rr = pluri_canonical_rank(X, nu)
    free = drops["even"] == 0 and drops["odd"] == 0
    return SuperPointReport(nu, free, rr.rank, drops["even"], drops["odd"],
                            rr.hypotheses_hold)


@dataclass(frozen=True)
class NonembeddingReport:
    rank: RankPair
    h0_L: int
    obstruction: Optional[str]


def canonical_nonembedding_demo(X: SplitSupercurve) -> NonembeddingReport:
    """First Berezinian power over a point base.  For a theta
    characteristic without sections the rank is 0|g, and the would-be
    ambient space has even dimension -1: no room for a 1|1-dimensional
    curve, so there is no canonical model.  For h0(L) >= 1 the report
    carries the rank pair and makes no claim."""
    rr = pluri_canonical_rank(X, 1)
    g = X.genus
    h0_L = h0(X.curve, X.L.rep)
    if h0_L == 0:
        claim = (f"rank 0|{g}: the ambient space would be P^(-1|{g}), "
                 f"which cannot contain a 1|1-dimensional curve")
        return NonembeddingReport(rr.rank, h0_L, claim)
    return NonembeddingReport(rr.rank, h0_L, None)
