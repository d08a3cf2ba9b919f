"""Riemann-Roch spaces, divisor classes, and theta characteristics.

L(D) is computed exactly: after clearing affine denominators the candidate
functions are x^i and x^j y with pole orders at infinity controlled by their
degrees (pole orders of the two kinds never collide, since one is even and
the other odd), and the affine vanishing conditions become rational linear
constraints on Taylor coefficients in canonical local parameters.

The canonical class is (2g-2) * infinity, so h^1(D) = h^0(K - D) by duality
and theta characteristics are square roots of K in the divisor class group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from . import polyq
from .curve import (CurvePoint, Divisor, FunctionFieldElement,
                    HyperellipticCurve)
from .fieldext import QuadExt, make_sqrt
from .linalg import kernel_basis


def _split_rows(entries: List) -> List[List[Fraction]]:
    """One linear condition with entries in Q(sqrt(d)) becomes two rational
    conditions (rational and sqrt parts); a rational row stays single."""
    if any(isinstance(e, QuadExt) for e in entries):
        u_row = [e.u if isinstance(e, QuadExt) else Fraction(e) for e in entries]
        v_row = [e.v if isinstance(e, QuadExt) else Fraction(0) for e in entries]
        return [u_row, v_row]
    return [[Fraction(e) for e in entries]]


def rr_space(curve: HyperellipticCurve, D: Divisor) -> List[FunctionFieldElement]:
    """Basis of L(D) = { h : div(h) + D >= 0 }, cached per divisor."""
    key = D.key()
    if key in curve._rr_cache:
        return curve._rr_cache[key]
    if not D.galois_stable():
        raise ValueError("divisor is not stable under conjugation, "
                         "so L(D) is not defined over Q")
    result = _rr_space_uncached(curve, D)
    curve._rr_cache[key] = result
    return result


def _rr_space_uncached(curve, D):
    if D.degree() < 0:
        return []
    inf = curve.infinity()
    n_inf = D[inf]

    fibers: Dict[Fraction, List[Tuple[CurvePoint, int]]] = {}
    for P, n in D.items():
        if not P.at_infinity:
            fibers.setdefault(P.x, []).append((P, n))

    # clear affine poles of D with a polynomial denominator d(x)
    clear: Dict[Fraction, int] = {}
    for x0, pts in fibers.items():
        if any(P.is_branch() for P, _ in pts):
            m = max(n for _, n in pts)
            clear[x0] = (m + 1) // 2 if m > 0 else 0
        else:
            clear[x0] = max(0, max(n for _, n in pts))
    d = polyq.ONE
    for x0 in sorted(clear):
        if clear[x0]:
            d = polyq.mul(d, polyq.pow_(polyq.poly([-x0, Fraction(1)]), clear[x0]))

    # candidates (p + q y)/d; pole orders at infinity are 2i for x^i and
    # 2j + 2g + 1 for x^j y, and these bounds are exact by parity
    bound = n_inf + 2 * polyq.deg(d)
    n_x = bound // 2 + 1 if bound >= 0 else 0
    n_y = (bound - 2 * curve.genus - 1) // 2 + 1
    n_y = max(0, n_y)
    ncand = n_x + n_y
    if ncand == 0:
        return []

    def candidate_series(P: CurvePoint, cut: int) -> List:
        out = []
        ys = None
        for i in range(n_x):
            out.append(curve._poly_series_at(polyq.pow_(polyq.X, i), P, cut))
        if n_y:
            ys = curve.y_series_at(P, cut)
        for j in range(n_y):
            out.append(curve._poly_series_at(polyq.pow_(polyq.X, j), P, cut) * ys)
        return out

    rows: List[List[Fraction]] = []
    for x0 in sorted(set(fibers) | set(clear)):
        e = clear.get(x0, 0)
        if polyq.eval_at(curve.f, x0) == 0:
            W = curve.branch_point(x0)
            r = 2 * e - D[W]
            if r > 0:
                series = candidate_series(W, r)
                for k in range(r):
                    rows.extend(_split_rows([s.coeff(k) for s in series]))
        else:
            y0 = make_sqrt(polyq.eval_at(curve.f, x0))
            if isinstance(y0, QuadExt):
                P = curve.point(x0, sign=1)
                r = e - D[P]
                if r > 0:
                    series = candidate_series(P, r)
                    for k in range(r):
                        rows.extend(_split_rows([s.coeff(k) for s in series]))
            else:
                for sign in (1, -1):
                    P = curve.point(x0, sign=sign)
                    r = e - D[P]
                    if r > 0:
                        series = candidate_series(P, r)
                        for k in range(r):
                            rows.extend(_split_rows([s.coeff(k) for s in series]))

    basis_vecs = kernel_basis(rows, ncand)
    basis = []
    for v in basis_vecs:
        A = polyq.poly(v[:n_x])
        B = polyq.poly(v[n_x:])
        basis.append(FunctionFieldElement(curve, A, B, d))
    return basis


def h0(curve: HyperellipticCurve, D: Divisor) -> int:
    return len(rr_space(curve, D))


def canonical_divisor(curve: HyperellipticCurve) -> Divisor:
    """(2g-2) * infinity; dx/y has its full divisor at the infinite point."""
    return Divisor({curve.infinity(): 2 * curve.genus - 2})


def h1(curve: HyperellipticCurve, D: Divisor) -> int:
    """h^1(D) = h^0(K - D) by duality."""
    return h0(curve, canonical_divisor(curve) - D)


def is_principal(curve: HyperellipticCurve, D: Divisor
                 ) -> Tuple[bool, Optional[FunctionFieldElement]]:
    """Decide whether D = div(h) for some function; the witness h satisfies
    div(h) = D exactly."""
    if D.degree() != 0:
        return False, None
    basis = rr_space(curve, D)
    if not basis:
        return False, None
    h = basis[0].inverse()
    assert curve.divisor_of(h) == D, "principality witness has wrong divisor"
    return True, h


def class_eq(curve: HyperellipticCurve, D1: Divisor, D2: Divisor) -> bool:
    return is_principal(curve, D1 - D2)[0]


def reduce_weierstrass(curve: HyperellipticCurve, D: Divisor) -> Divisor:
    """Linearly equivalent divisor with branch-point coefficients in
    {-1, 0, 1}: pairs at a branch point move to infinity since
    div(x - r) = 2 W_r - 2 inf."""
    inf = curve.infinity()
    data = dict(D.data)
    extra = 0
    for P, n in list(data.items()):
        if not P.at_infinity and P.is_branch() and abs(n) >= 2:
            pairs = (abs(n) // 2) * (1 if n > 0 else -1)
            data[P] = n - 2 * pairs
            extra += 2 * pairs
    if extra:
        data[inf] = data.get(inf, 0) + extra
    return Divisor(data)


class DivisorClass:
    """A divisor class, carried by an explicit representative."""

    __slots__ = ("curve", "rep")

    def __init__(self, curve: HyperellipticCurve, rep: Divisor):
        self.curve = curve
        self.rep = rep

    def degree(self) -> int:
        return self.rep.degree()

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.curve, self.rep + other.rep)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.curve, self.rep - other.rep)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.curve, -self.rep)

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.curve, n * self.rep)

    __mul__ = __rmul__

    def reduced(self) -> "DivisorClass":
        return DivisorClass(self.curve, reduce_weierstrass(self.curve, self.rep))

    def h0(self) -> int:
        return h0(self.curve, self.rep)

    def h1(self) -> int:
        return h1(self.curve, self.rep)

    def is_effective_class(self) -> bool:
        return self.h0() >= 1

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return class_eq(self.curve, self.rep, other.rep)

    def __hash__(self):
        raise TypeError("DivisorClass equality is linear equivalence; not hashable")

    def __repr__(self):
        return f"[{self.rep!r}]"


def canonical_class(curve: HyperellipticCurve) -> DivisorClass:
    return DivisorClass(curve, canonical_divisor(curve))


@dataclass(frozen=True)
class ThetaCharacteristic:
    """A square root of the canonical class, represented by the divisor
    sum of branch points over a subset S plus (g - 1 - |S|) * infinity.
    `subset` holds indices into the sorted list of finite branch roots."""

    subset: Tuple[int, ...]
    roots: Tuple[Fraction, ...]
    cls: DivisorClass
    h0: int

    @property
    def divisor(self) -> Divisor:
        return self.cls.rep

    @property
    def parity(self) -> str:
        return "odd" if self.h0 % 2 else "even"

    @property
    def is_odd(self) -> bool:
        return self.h0 % 2 == 1


def branch_roots(curve: HyperellipticCurve) -> List[Fraction]:
    """Sorted finite branch x-coordinates; requires all of them rational."""
    roots, cof = polyq.rational_roots(curve.f)
    if polyq.deg(cof) > 0:
        raise ValueError("all finite branch points must be rational")
    return [r for r, _ in roots]


def theta_divisor(curve: HyperellipticCurve, roots) -> Divisor:
    g = curve.genus
    roots = tuple(roots)
    data = {curve.branch_point(r): 1 for r in roots}
    return Divisor(data) + Divisor({curve.infinity(): g - 1 - len(roots)})


def theta_from_subset(curve: HyperellipticCurve, subset) -> ThetaCharacteristic:
    rs = branch_roots(curve)
    subset = tuple(sorted(int(i) for i in subset))
    if len(set(subset)) != len(subset) or any(not 0 <= i < len(rs) for i in subset):
        raise ValueError(f"invalid branch-root subset {subset}")
    if len(subset) > curve.genus:
        raise ValueError("representatives use at most g branch points")
    roots = tuple(rs[i] for i in subset)
    D = theta_divisor(curve, roots)
    return ThetaCharacteristic(subset, roots, DivisorClass(curve, D), h0(curve, D))


def theta_characteristics(curve: HyperellipticCurve) -> List[ThetaCharacteristic]:
    """All 2^(2g) theta characteristics, for curves whose finite branch
    points are all rational.  Representatives use at most g branch points."""
    rs = branch_roots(curve)
    g = curve.genus
    out: List[ThetaCharacteristic] = []
    for size in range(g + 1):
        for S in combinations(range(len(rs)), size):
            out.append(theta_from_subset(curve, S))
    assert len(out) == 2 ** (2 * g), "census size mismatch"
    return out


def parity_representatives(curve: HyperellipticCurve
                           ) -> Tuple[ThetaCharacteristic, ThetaCharacteristic]:
    """First theta characteristic with h0 = 0 and first with h0 odd, in
    census order.  Parity alone does not pin down h0: for g >= 3 the class
    of g-1 infinite points is even with h0 = 2 (it contains the degree-2
    pencil), and the dimensional statements quantified over "even" thetas
    assume the generic case h0 = 0.

    Subsets of size below g give effective divisors (h0 >= 1), and every
    size-g subset has h0 = 0 (a section would need its denominator to
    divide out of its numerator), so the first h0 = 0 class is the one on
    the first g roots; it is built directly rather than scanned for."""
    rs = branch_roots(curve)
    g = curve.genus
    even = theta_from_subset(curve, tuple(range(g)))
    assert even.h0 == 0, "size-g subset with unexpected sections"
    for size in range(g + 1):
        for S in combinations(range(len(rs)), size):
            th = theta_from_subset(curve, S)
            if th.is_odd:
                return even, th
    raise RuntimeError("no odd theta characteristic found")
