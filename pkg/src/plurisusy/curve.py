"""Hyperelliptic curves y^2 = f(x) with exact function-field arithmetic.

f is squarefree of odd degree 2g+1 >= 5, so there is a single point at
infinity and the genus is g >= 2.  Functions are represented as
(A(x) + B(x) y) / den(x) with rational polynomial coefficients.  The module
computes valuations at rational points (including infinity and branch
points), exact Laurent expansions in canonical local parameters, and full
divisors of functions whose support is defined over Q or a quadratic
extension in the y-coordinate.

Local parameters: t = x - x0 at a finite point off the branch locus,
t = y at a finite branch point (so x - r = t^2 * unit), and at infinity
the parameter with x = t^-2 and y = t^-(2g+1) * (unit); consequently
x has a double pole and y a pole of order 2g+1 at infinity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from . import polyq
from .polyq import Poly
from .fieldext import QuadExt, field_conj, make_sqrt
from .series import TSeries

Scalar = Union[Fraction, QuadExt]


class UnrepresentableSupportError(ValueError):
    """Raised when a divisor computation meets support that does not live
    over Q with at worst a quadratic extension in y."""


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected a rational number, got {v!r}")


class HyperellipticCurve:
    """y^2 = f(x) with f squarefree of odd degree 2g+1 >= 5."""

    def __init__(self, f):
        f = polyq.poly(f)
        d = polyq.deg(f)
        if d < 5 or d % 2 == 0:
            raise ValueError("f must have odd degree at least 5")
        if not polyq.is_squarefree(f):
            raise ValueError("f must be squarefree")
        self.f = f
        self.genus = (d - 1) // 2
        self._rr_cache: Dict = {}
        self._echelon_cache: Dict = {}

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, HyperellipticCurve) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"HyperellipticCurve(y^2 = {polyq.format_poly(self.f)})"

    # -- points ------------------------------------------------------------

    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None, at_infinity=True)

    def point(self, x, y=None, sign: int = 1) -> "CurvePoint":
        """Finite point with rational x.  If y is omitted it is taken to be
        sign * sqrt(f(x)), possibly in a quadratic extension."""
        x = _as_fraction(x)
        fx = polyq.eval_at(self.f, x)
        if y is None:
            y = make_sqrt(fx)
            if sign == -1:
                y = -y
        else:
            if not isinstance(y, QuadExt):
                y = _as_fraction(y)
            if y * y != fx:
                raise ValueError(f"({x}, {y}) does not lie on the curve")
        return CurvePoint(self, x, y)

    def branch_point(self, r) -> "CurvePoint":
        r = _as_fraction(r)
        if polyq.eval_at(self.f, r) != 0:
            raise ValueError(f"{r} is not a root of f")
        return CurvePoint(self, r, Fraction(0))

    def rational_branch_points(self) -> List["CurvePoint"]:
        roots, _ = polyq.rational_roots(self.f)
        return [self.branch_point(r) for r, _m in roots]

    # -- functions ---------------------------------------------------------

    def zero_fn(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self, polyq.ZERO, polyq.ZERO, polyq.ONE)

    def one_fn(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self, polyq.ONE, polyq.ZERO, polyq.ONE)

    def x_fn(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self, polyq.X, polyq.ZERO, polyq.ONE)

    def y_fn(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self, polyq.ZERO, polyq.ONE, polyq.ONE)

    def function(self, A, B=polyq.ZERO, den=polyq.ONE) -> "FunctionFieldElement":
        return FunctionFieldElement(self, polyq.poly(A), polyq.poly(B), polyq.poly(den))

    # -- local expansions ----------------------------------------------------

    def x_series_at_branch(self, r: Fraction, cut: int) -> TSeries:
        """Series of x - r in the parameter t = y at the branch point (r, 0),
        solving f(x(t)) = t^2 by fixed point iteration."""
        fshift = polyq.shift(self.f, r)  # f(r+s), constant term 0
        assert fshift and fshift[0] == 0
        u = fshift[1:]  # f(r+s) = s * u(s), u(0) != 0
        t2 = TSeries.from_poly_coeffs([Fraction(0), Fraction(0), Fraction(1)], cut)
        s = t2.scale(1 / u[0])
        for _ in range(cut):
            nxt = t2 * _compose_poly(u, s, cut).inverse()
            if nxt.val == s.val and nxt.coeffs == s.coeffs and nxt.cut == s.cut:
                break
            s = nxt
        check = _compose_poly(fshift, s, cut) - t2
        assert check.is_empty() or check.first_nonzero() is None, "branch series failed"
        return s

    def y_series_at(self, P: "CurvePoint", cut: int) -> TSeries:
        """Series of y in the local parameter at a finite point."""
        assert not P.at_infinity
        if P.y == 0:
            return TSeries.from_poly_coeffs([Fraction(0), Fraction(1)], cut)
        fshift = polyq.shift(self.f, P.x)
        fx = TSeries.from_poly_coeffs(list(fshift), cut)
        return fx.sqrt_with(P.y)

    def y_series_at_infinity(self, cut: int) -> TSeries:
        """Series of y at infinity: y = t^-(2g+1) sqrt(G(t^2)) where
        G(s) = f(1/s) * s^(2g+1) has nonzero constant term lead(f)."""
        m = 2 * self.genus + 1
        G = list(reversed(list(self.f)))
        coeffs: List = []
        for c in G:
            coeffs.append(c)
            coeffs.append(Fraction(0))
        inner_cut = max(cut + m, 1)
        inner = TSeries.from_poly_coeffs(coeffs, inner_cut)
        root0 = make_sqrt(polyq.lead(self.f))
        return inner.sqrt_with(root0).shift(-m)

    def _poly_series_at(self, p: Poly, P: "CurvePoint", cut: int) -> TSeries:
        """Laurent series of the polynomial function p(x) at P."""
        if P.at_infinity:
            if not p:
                return TSeries.zero(cut)
            n = polyq.deg(p)
            lo = -2 * n
            if cut <= lo:
                return TSeries.zero(cut)  # all exponents of p(t^-2) lie at or above cut
            coeffs: List = [Fraction(0)] * (cut - lo)
            for i, c in enumerate(p):
                k = -2 * i - lo
                if 0 <= k < len(coeffs):
                    coeffs[k] = c
            return TSeries(lo, coeffs, cut)
        if P.y == 0:
            xs = self.x_series_at_branch(P.x, cut)
            shifted = polyq.shift(p, P.x)
            return _compose_poly(shifted, xs, cut)
        return TSeries.from_poly_coeffs(list(polyq.shift(p, P.x)), cut)

    def laurent_at(self, fn: "FunctionFieldElement", P: "CurvePoint",
                   nterms: int = 1) -> TSeries:
        """Exact Laurent expansion of fn at P, valid through at least nterms
        coefficients starting at the true valuation."""
        v = self.valuation(fn, P)
        target = v + nterms
        cut = max(target, 1) + 2 * self.genus + 4 + 2 * polyq.deg(fn.den)
        for _ in range(12):
            num = self._poly_series_at(fn.A, P, cut)
            if fn.B:
                ys = (self.y_series_at_infinity(cut) if P.at_infinity
                      else self.y_series_at(P, cut))
                num = num + self._poly_series_at(fn.B, P, cut) * ys
            den = self._poly_series_at(fn.den, P, cut)
            q = num / den
            if q.cut >= target:
                assert q.first_nonzero() == v, "series disagrees with valuation"
                return q
            cut += target - q.cut + 4
        raise RuntimeError("laurent_at did not reach requested precision")

    def evaluate(self, fn: "FunctionFieldElement", P: "CurvePoint") -> Scalar:
        """Value of fn at a point where it has no pole."""
        if self.valuation(fn, P) < 0:
            raise ZeroDivisionError("function has a pole at the point")
        s = self.laurent_at(fn, P, nterms=1)
        return s.coeff(0)

    # -- valuations ----------------------------------------------------------

    def valuation(self, fn: "FunctionFieldElement", P: "CurvePoint") -> int:
        """Order of vanishing of fn at P (negative at poles)."""
        if fn.is_zero():
            raise ValueError("the zero function has no valuation")
        A, B, den = fn.A, fn.B, fn.den
        if P.at_infinity:
            cands = []
            if A:
                cands.append(-2 * polyq.deg(A))
            if B:
                cands.append(-(2 * self.genus + 1) - 2 * polyq.deg(B))
            return min(cands) + 2 * polyq.deg(den)
        x0 = P.x
        if P.y == 0:
            cands = []
            if A:
                cands.append(2 * polyq.mult_at(A, x0))
            if B:
                cands.append(1 + 2 * polyq.mult_at(B, x0))
            return min(cands) - 2 * polyq.mult_at(den, x0)
        return self._val_num_at(A, B, P) - polyq.mult_at(den, x0)

    def _val_num_at(self, A: Poly, B: Poly, P: "CurvePoint") -> int:
        """Valuation of A + B y at a finite non-branch point, by series
        expansion bounded by the multiplicity of the norm A^2 - B^2 f."""
        x0 = P.x
        k = 0
        if A and B:
            k = min(polyq.mult_at(A, x0), polyq.mult_at(B, x0))
        elif A:
            k = polyq.mult_at(A, x0)
        elif B:
            k = polyq.mult_at(B, x0)
        if k:
            lin = polyq.from_roots([x0] * k)
            A = polyq.exact_div(A, lin) if A else A
            B = polyq.exact_div(B, lin) if B else B
        val0 = polyq.eval_at(A, x0) + polyq.eval_at(B, x0) * P.y
        if val0 != 0:
            return k
        norm = polyq.sub(polyq.mul(A, A), polyq.mul(polyq.mul(B, B), self.f))
        M = polyq.mult_at(norm, x0)
        cut = M + 1
        s = TSeries.from_poly_coeffs(list(polyq.shift(A, x0)), cut)
        s = s + TSeries.from_poly_coeffs(list(polyq.shift(B, x0)), cut) \
            * self.y_series_at(P, cut)
        lead = s.first_nonzero()
        assert lead is not None and lead == M, "norm bound violated"
        return k + lead

    # -- divisors ------------------------------------------------------------

    def divisor_of(self, fn: "FunctionFieldElement") -> "Divisor":
        """Principal divisor of fn.  Raises UnrepresentableSupportError when
        a zero or pole has an irrational x-coordinate."""
        if fn.is_zero():
            raise ValueError("the zero function has no divisor")
        data: Dict[CurvePoint, int] = {}
        inf = self.infinity()

        def bump(pt, n):
            if n:
                data[pt] = data.get(pt, 0) + n

        # denominator: div(1/den)
        roots, cof = polyq.rational_roots(fn.den)
        if polyq.deg(cof) > 0:
            raise UnrepresentableSupportError(
                f"pole support has irrational x-coordinates: {polyq.format_poly(cof)}")
        for r, m in roots:
            if polyq.eval_at(self.f, r) == 0:
                bump(self.branch_point(r), -2 * m)
            else:
                bump(self.point(r, sign=1), -m)
                bump(self.point(r, sign=-1), -m)
            bump(inf, 2 * m)

        # numerator A + B y
        A, B = fn.A, fn.B
        norm = polyq.sub(polyq.mul(A, A), polyq.mul(polyq.mul(B, B), self.f))
        assert norm, "nonzero function with zero norm"
        roots, cof = polyq.rational_roots(norm)
        if polyq.deg(cof) > 0:
            raise UnrepresentableSupportError(
                f"zero support has irrational x-coordinates: {polyq.format_poly(cof)}")
        for x0, M in roots:
            if polyq.eval_at(self.f, x0) == 0:
                W = self.branch_point(x0)
                vW = self.valuation(FunctionFieldElement(self, A, B, polyq.ONE), W)
                assert vW == M, "branch valuation disagrees with norm multiplicity"
                bump(W, vW)
            else:
                Pp = self.point(x0, sign=1)
                vp = self._val_num_at(A, B, Pp)
                bump(Pp, vp)
                bump(self.point(x0, sign=-1), M - vp)
        cands = []
        if A:
            cands.append(-2 * polyq.deg(A))
        if B:
            cands.append(-(2 * self.genus + 1) - 2 * polyq.deg(B))
        bump(inf, min(cands))

        D = Divisor(data)
        assert D.degree() == 0, "principal divisor must have degree zero"
        return D


def _compose_poly(p: Iterable, s: TSeries, cut: int) -> TSeries:
    """p(s(t)) for a polynomial p and a series s with s.val >= 0."""
    assert s.is_empty() or s.val >= 0
    coeffs = list(p)
    acc = TSeries.zero(cut)
    for c in reversed(coeffs):
        acc = acc * s + TSeries.from_poly_coeffs([c], cut)
    return acc


class CurvePoint:
    """A rational point of the curve: finite (x, y) with rational x and y in
    Q or a quadratic extension, or the single point at infinity."""

    __slots__ = ("curve", "x", "y", "at_infinity")

    def __init__(self, curve: HyperellipticCurve, x, y, at_infinity: bool = False):
        self.curve = curve
        self.at_infinity = at_infinity
        if at_infinity:
            self.x = None
            self.y = None
        else:
            self.x = _as_fraction(x)
            self.y = y if isinstance(y, QuadExt) else _as_fraction(y)

    def is_branch(self) -> bool:
        return (not self.at_infinity) and self.y == 0

    def is_rational(self) -> bool:
        return self.at_infinity or not isinstance(self.y, QuadExt)

    def conjugate(self) -> "CurvePoint":
        """Hyperelliptic involution (x, y) -> (x, -y); for points with y in
        a quadratic extension this is also the Galois conjugate."""
        if self.at_infinity:
            return self
        return CurvePoint(self.curve, self.x, -self.y)

    def _key(self):
        if self.at_infinity:
            return (1, Fraction(0), 0, Fraction(0), Fraction(0), 0)
        y = self.y
        if isinstance(y, QuadExt):
            return (0, self.x, 1, y.u, y.v, y.d)
        return (0, self.x, 0, y, Fraction(0), 0)

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.at_infinity:
            return "Inf"
        return f"({self.x}, {self.y})"


class FunctionFieldElement:
    """(A(x) + B(x) y) / den(x), stored in normal form: den monic and
    coprime to gcd(A, B)."""

    __slots__ = ("curve", "A", "B", "den")

    def __init__(self, curve: HyperellipticCurve, A, B, den):
        A, B, den = polyq.poly(A), polyq.poly(B), polyq.poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = polyq.gcd(polyq.gcd(A, B), den)
        if polyq.deg(g) > 0:
            A = polyq.exact_div(A, g)
            B = polyq.exact_div(B, g)
            den = polyq.exact_div(den, g)
        lc = polyq.lead(den)
        if lc != 1:
            inv = 1 / lc
            A = polyq.scale(A, inv)
            B = polyq.scale(B, inv)
            den = polyq.scale(den, inv)
        self.curve = curve
        self.A = A
        self.B = B
        self.den = den

    def is_zero(self) -> bool:
        return not self.A and not self.B

    def _check(self, other):
        if self.curve != other.curve:
            raise ValueError("functions on different curves")

    def _coerce(self, other) -> "FunctionFieldElement":
        if isinstance(other, FunctionFieldElement):
            return other
        c = _as_fraction(other)
        return FunctionFieldElement(self.curve, (c,), polyq.ZERO, polyq.ONE)

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        A = polyq.add(polyq.mul(self.A, other.den), polyq.mul(other.A, self.den))
        B = polyq.add(polyq.mul(self.B, other.den), polyq.mul(other.B, self.den))
        return FunctionFieldElement(self.curve, A, B, polyq.mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return FunctionFieldElement(self.curve, polyq.neg(self.A),
                                    polyq.neg(self.B), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        f = self.curve.f
        A = polyq.add(polyq.mul(self.A, other.A),
                      polyq.mul(polyq.mul(self.B, other.B), f))
        B = polyq.add(polyq.mul(self.A, other.B), polyq.mul(self.B, other.A))
        return FunctionFieldElement(self.curve, A, B, polyq.mul(self.den, other.den))

    __rmul__ = __mul__

    def conj(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self.curve, self.A, polyq.neg(self.B), self.den)

    def norm_fn(self) -> "FunctionFieldElement":
        """fn * conj(fn) = (A^2 - B^2 f) / den^2, a rational function of x."""
        N = polyq.sub(polyq.mul(self.A, self.A),
                      polyq.mul(polyq.mul(self.B, self.B), self.curve.f))
        return FunctionFieldElement(self.curve, N, polyq.ZERO,
                                    polyq.mul(self.den, self.den))

    def inverse(self) -> "FunctionFieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        N = polyq.sub(polyq.mul(self.A, self.A),
                      polyq.mul(polyq.mul(self.B, self.B), self.curve.f))
        return FunctionFieldElement(self.curve, polyq.mul(self.den, self.A),
                                    polyq.neg(polyq.mul(self.den, self.B)), N)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.curve.one_fn()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, (FunctionFieldElement, int, Fraction)):
            return NotImplemented
        other = self._coerce(other)
        return (self.A, self.B, self.den) == (other.A, other.B, other.den)

    def __hash__(self):
        return hash((self.A, self.B, self.den))

    def __repr__(self):
        num = polyq.format_poly(self.A) if self.A else ""
        if self.B:
            bs = polyq.format_poly(self.B)
            ypart = f"({bs})*y" if polyq.deg(self.B) > 0 or polyq.lead(self.B) != 1 else "y"
            num = f"{num} + {ypart}" if num else ypart
        if not num:
            num = "0"
        if self.den == polyq.ONE:
            return num
        return f"({num})/({polyq.format_poly(self.den)})"


class Divisor:
    """Finite formal Z-combination of curve points with deterministic
    ordering of the support."""

    __slots__ = ("data",)

    def __init__(self, data: Optional[Dict[CurvePoint, int]] = None):
        self.data = {p: n for p, n in (data or {}).items() if n != 0}

    @staticmethod
    def of_point(P: CurvePoint, n: int = 1) -> "Divisor":
        return Divisor({P: n})

    def items(self) -> List[Tuple[CurvePoint, int]]:
        return sorted(self.data.items(), key=lambda kv: kv[0]._key())

    def support(self) -> List[CurvePoint]:
        return [p for p, _ in self.items()]

    def __getitem__(self, P: CurvePoint) -> int:
        return self.data.get(P, 0)

    def degree(self) -> int:
        return sum(self.data.values())

    def __add__(self, other: "Divisor") -> "Divisor":
        data = dict(self.data)
        for p, n in other.data.items():
            data[p] = data.get(p, 0) + n
        return Divisor(data)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __neg__(self) -> "Divisor":
        return Divisor({p: -n for p, n in self.data.items()})

    def __rmul__(self, n: int) -> "Divisor":
        return Divisor({p: n * m for p, m in self.data.items()})

    __mul__ = __rmul__

    def is_effective(self) -> bool:
        return all(n >= 0 for n in self.data.values())

    def is_zero(self) -> bool:
        return not self.data

    def effective_part(self) -> "Divisor":
        return Divisor({p: n for p, n in self.data.items() if n > 0})

    def galois_stable(self) -> bool:
        """True when conjugate points carry equal coefficients, so the
        divisor is defined over Q."""
        for p, n in self.data.items():
            if not p.is_rational() and self.data.get(p.conjugate(), 0) != n:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Divisor) and self.data == other.data

    def __hash__(self):
        return hash(frozenset(self.data.items()))

    def key(self):
        return tuple((p._key(), n) for p, n in self.items())

    def __repr__(self):
        if not self.data:
            return "0"
        bits = []
        for p, n in self.items():
            if n == 1:
                bits.append(f"{p!r}")
            else:
                bits.append(f"{n}*{p!r}")
        return " + ".join(bits)


def standard_curve(g: int) -> HyperellipticCurve:
    """y^2 = x(x-1)...(x-2g): all 2g+1 finite branch points rational."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    return HyperellipticCurve(polyq.from_roots([Fraction(i) for i in range(2 * g + 1)]))
