"""Supercommutative algebra with nilpotent odd generators, exactly.

Elements live in the Grassmann algebra over a fixed ordered list of odd
generators, with coefficients that are rational functions of even symbols
(sympy expressions with exact rational arithmetic; no floats).  On top of
the element arithmetic this module provides supermatrices with their
Berezinian, graded vector fields in one even and one odd coordinate with
the super Lie bracket, and the superconformality test

    D z' = theta' * D theta'      where D = d/dtheta + theta * d/dz,

whose square is the generator of translations: (1/2)[D, D] = d/dz.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

import sympy as sp

Subset = Tuple[int, ...]


def _to_expr(c) -> sp.Expr:
    if isinstance(c, sp.Expr):
        return c
    if isinstance(c, Fraction):
        return sp.Rational(c.numerator, c.denominator)
    if isinstance(c, str):
        return sp.sympify(c, rational=True)
    return sp.sympify(c)


def _norm_expr(e: sp.Expr) -> sp.Expr:
    # rational constants are already canonical; everything else is put in
    # cancelled p/q form so that zero detection is decidable
    if e.is_Rational:
        return e
    return sp.cancel(sp.together(e))


def _expr_is_zero(e: sp.Expr) -> bool:
    return _norm_expr(e) == 0


def _merge_sign(s: Subset, t: Subset) -> int:
    """Koszul sign for theta_s * theta_t with s, t disjoint sorted tuples:
    (-1)^(number of out-of-order generator pairs)."""
    inv = 0
    for a in s:
        for b in t:
            if a > b:
                inv += 1
    return -1 if inv % 2 else 1


class GrassmannElement:
    """A finite sum  sum_S c_S(z, ...) * theta_S  over sorted subsets S of
    the odd generators.  Immutable in use; terms maps sorted index tuples
    to nonzero sympy coefficients."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: Sequence[str], terms: Mapping[Subset, object]):
        self.gens = tuple(gens)
        clean: Dict[Subset, sp.Expr] = {}
        for key, c in terms.items():
            key = tuple(key)
            assert list(key) == sorted(set(key)), f"term key {key} not a sorted subset"
            assert all(0 <= i < len(self.gens) for i in key)
            e = _norm_expr(_to_expr(c))
            if e != 0:
                clean[key] = e
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def scalar(gens: Sequence[str], c) -> "GrassmannElement":
        return GrassmannElement(gens, {(): c})

    @staticmethod
    def generator(gens: Sequence[str], name: str) -> "GrassmannElement":
        idx = tuple(gens).index(name)
        return GrassmannElement(gens, {(idx,): 1})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def body(self) -> sp.Expr:
        """Image under the projection that kills every odd generator."""
        return self.terms.get((), sp.Integer(0))

    def soul(self) -> "GrassmannElement":
        return GrassmannElement(self.gens, {k: c for k, c in self.terms.items() if k})

    def has_parity(self, p: int) -> bool:
        return all(len(k) % 2 == p for k in self.terms)

    def parity(self) -> Optional[int]:
        """0 or 1 for homogeneous elements, None for mixed or zero."""
        if not self.terms:
            return None
        ps = {len(k) % 2 for k in self.terms}
        return ps.pop() if len(ps) == 1 else None

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "GrassmannElement"):
        if self.gens != other.gens:
            raise ValueError("elements from algebras with different odd generators")

    def __add__(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement.scalar(self.gens, other)
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, sp.Integer(0)) + c
        return GrassmannElement(self.gens, terms)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.gens, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement.scalar(self.gens, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GrassmannElement):
            c = _to_expr(other)
            return GrassmannElement(self.gens, {k: v * c for k, v in self.terms.items()})
        self._check(other)
        terms: Dict[Subset, sp.Expr] = {}
        for s, cs in self.terms.items():
            for t, ct in other.terms.items():
                if set(s) & set(t):
                    continue  # nilpotency
                key = tuple(sorted(s + t))
                sign = _merge_sign(s, t)
                add = sign * cs * ct
                terms[key] = terms.get(key, sp.Integer(0)) + add
        return GrassmannElement(self.gens, terms)

    def __rmul__(self, other):
        # only scalars reach here; they commute with everything
        c = _to_expr(other)
        return GrassmannElement(self.gens, {k: c * v for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc = GrassmannElement.scalar(self.gens, 1)
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            other = GrassmannElement.scalar(self.gens, other)
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("GrassmannElement is not hashable")

    def inverse(self) -> "GrassmannElement":
        """Multiplicative inverse; exists iff the body is a nonzero rational
        function, via a finite geometric series in the nilpotent part."""
        b = self.body()
        if _expr_is_zero(b):
            raise ZeroDivisionError("element with zero body is not invertible")
        binv = _norm_expr(1 / b)
        n = self.soul()
        result = GrassmannElement.scalar(self.gens, binv)
        power = GrassmannElement.scalar(self.gens, 1)
        coeff = binv
        for _ in range(len(self.gens)):
            power = power * n
            if power.is_zero():
                break
            coeff = _norm_expr(-coeff * binv)
            result = result + power * coeff
        return result

    def __truediv__(self, other):
        if isinstance(other, GrassmannElement):
            return self * other.inverse()
        c = _to_expr(other)
        return self * _norm_expr(1 / c)

    # -- calculus ----------------------------------------------------------

    def d_even(self, sym: sp.Symbol) -> "GrassmannElement":
        """Coefficientwise d/d(sym) for an even symbol."""
        return GrassmannElement(
            self.gens, {k: sp.diff(c, sym) for k, c in self.terms.items()}
        )

    def d_odd(self, name: str) -> "GrassmannElement":
        """Left derivative with respect to an odd generator."""
        idx = self.gens.index(name)
        terms: Dict[Subset, sp.Expr] = {}
        for k, c in self.terms.items():
            if idx not in k:
                continue
            pos = k.index(idx)
            sign = -1 if pos % 2 else 1
            key = tuple(x for x in k if x != idx)
            terms[key] = terms.get(key, sp.Integer(0)) + sign * c
        return GrassmannElement(self.gens, terms)

    def substitute(
        self,
        even_subs: Optional[Mapping[sp.Symbol, "GrassmannElement"]] = None,
        odd_subs: Optional[Mapping[str, "GrassmannElement"]] = None,
    ) -> "GrassmannElement":
        """Substitute elements for coordinates: an even element for at most
        one even symbol (Taylor expansion in its nilpotent part) and odd
        elements for odd generators."""
        even_subs = dict(even_subs or {})
        odd_subs = dict(odd_subs or {})
        if len(even_subs) > 1:
            raise ValueError("only one even symbol substitution is supported")
        for e in even_subs.values():
            if not e.has_parity(0):
                raise ValueError("even symbol must receive an even element")
        for o in odd_subs.values():
            if not o.has_parity(1):
                raise ValueError("odd generator must receive an odd element")

        result = GrassmannElement(self.gens, {})
        for k, c in self.terms.items():
            piece = self._subst_coeff(c, even_subs)
            for idx in k:
                name = self.gens[idx]
                factor = odd_subs.get(name, GrassmannElement.generator(self.gens, name))
                piece = piece * factor
            result = result + piece
        return result

    def _subst_coeff(self, c: sp.Expr, even_subs) -> "GrassmannElement":
        if not even_subs:
            return GrassmannElement.scalar(self.gens, c)
        (sym, elem), = even_subs.items()
        zb = elem.body()
        nil = elem.soul()
        result = GrassmannElement.scalar(self.gens, c.subs(sym, zb))
        power = GrassmannElement.scalar(self.gens, 1)
        dc = c
        fact = 1
        for k in range(1, len(self.gens) + 1):
            power = power * nil
            if power.is_zero():
                break
            dc = sp.diff(dc, sym)
            fact *= k
            result = result + power * _norm_expr(dc.subs(sym, zb) / fact)
        return result

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms, key=lambda s: (len(s), s)):
            mono = "*".join(self.gens[i] for i in k)
            c = self.terms[k]
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


class GrassmannAlgebra:
    """Convenience factory around a fixed ordered tuple of odd generators."""

    def __init__(self, gens: Sequence[str]):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate odd generator names")
        self.gens = gens

    def zero(self) -> GrassmannElement:
        return GrassmannElement(self.gens, {})

    def one(self) -> GrassmannElement:
        return GrassmannElement.scalar(self.gens, 1)

    def scalar(self, c) -> GrassmannElement:
        return GrassmannElement.scalar(self.gens, c)

    def gen(self, name: str) -> GrassmannElement:
        return GrassmannElement.generator(self.gens, name)

    def element(self, terms: Mapping[Subset, object]) -> GrassmannElement:
        return GrassmannElement(self.gens, terms)


# ---------------------------------------------------------------------------
# supermatrices and the Berezinian
# ---------------------------------------------------------------------------


def _det_even(entries) -> GrassmannElement:
    """Determinant of a square matrix of even (hence commuting) elements."""
    n = len(entries)
    if n == 0:
        raise ValueError("empty determinant has no algebra to live in")
    if n == 1:
        return entries[0][0]
    gens = entries[0][0].gens
    det = GrassmannElement(gens, {})
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in entries[1:]]
        term = entries[0][j] * _det_even(minor)
        det = det + (term if j % 2 == 0 else -term)
    return det


def _inv_even(entries) -> list:
    """Inverse of a square matrix of even elements via the adjugate."""
    n = len(entries)
    det = _det_even(entries)
    det_inv = det.inverse()
    if n == 1:
        return [[det_inv]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [entries[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = _det_even(minor)
            adj[j][i] = (cof if (i + j) % 2 == 0 else -cof) * det_inv
    return adj


class SuperMatrix:
    """Block supermatrix [[A, B], [C, D]] with A: p x p and D: q x q even,
    B and C odd.  Entries are GrassmannElements over one algebra."""

    def __init__(self, p: int, q: int, rows):
        self.p = p
        self.q = q
        self.rows = tuple(tuple(r) for r in rows)
        n = p + q
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("supermatrix shape mismatch")
        self.gens = self.rows[0][0].gens if n else ()
        for i in range(n):
            for j in range(n):
                e = self.rows[i][j]
                if e.gens != self.gens:
                    raise ValueError("entries from different algebras")
                want = 0 if (i < p) == (j < p) else 1
                if not e.has_parity(want):
                    raise ValueError(
                        f"entry ({i},{j}) must have parity {want}: {e!r}"
                    )

    @staticmethod
    def from_blocks(A, B, C, D) -> "SuperMatrix":
        p = len(A)
        q = len(D)
        rows = []
        for i in range(p):
            rows.append(list(A[i]) + list(B[i] if q else []))
        for i in range(q):
            rows.append(list(C[i] if p else []) + list(D[i]))
        return SuperMatrix(p, q, rows)

    def block(self, which: str):
        p, q = self.p, self.q
        if which == "A":
            return [list(self.rows[i][:p]) for i in range(p)]
        if which == "B":
            return [list(self.rows[i][p:]) for i in range(p)]
        if which == "C":
            return [list(self.rows[p + i][:p]) for i in range(q)]
        if which == "D":
            return [list(self.rows[p + i][p:]) for i in range(q)]
        raise KeyError(which)

    def __mul__(self, other: "SuperMatrix") -> "SuperMatrix":
        if (self.p, self.q) != (other.p, other.q):
            raise ValueError("supermatrix size mismatch")
        n = self.p + self.q
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = GrassmannElement(self.gens, {})
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return SuperMatrix(self.p, self.q, rows)

    def berezinian(self) -> GrassmannElement:
        """Ber = det(A - B D^-1 C) * det(D)^-1; defined iff det(D) has an
        invertible body.  Multiplicative on products."""
        if self.q == 0:
            return _det_even(self.block("A"))
        D = self.block("D")
        det_D = _det_even(D)
        if _expr_is_zero(det_D.body()):
            raise ZeroDivisionError("Berezinian undefined: det(D) has zero body")
        if self.p == 0:
            return det_D.inverse()
        A, B, C = self.block("A"), self.block("B"), self.block("C")
        Dinv = _inv_even(D)
        # S = A - B Dinv C
        S = [[None] * self.p for _ in range(self.p)]
        for i in range(self.p):
            for j in range(self.p):
                acc = A[i][j]
                for k in range(self.q):
                    for m in range(self.q):
                        acc = acc - B[i][k] * Dinv[k][m] * C[m][j]
                S[i][j] = acc
        return _det_even(S) * det_D.inverse()


# ---------------------------------------------------------------------------
# graded vector fields in coordinates (z | theta)
# ---------------------------------------------------------------------------


class VectorFieldSC:
    """Vector field a(z,theta) d/dz + b(z,theta) d/dtheta with graded
    coefficients; supports application to elements and the super bracket."""

    def __init__(self, a: GrassmannElement, b: GrassmannElement,
                 z: sp.Symbol, theta: str):
        if a.gens != b.gens:
            raise ValueError("coefficients from different algebras")
        self.a = a
        self.b = b
        self.z = z
        self.theta = theta

    def parity(self) -> Optional[int]:
        """Parity of the field: d/dz is even and d/dtheta odd, so an
        homogeneous field has a with parity p and b with parity 1-p."""
        for p in (0, 1):
            if self.a.has_parity(p) and self.b.has_parity(1 - p):
                return p
        return None

    def apply(self, e: GrassmannElement) -> GrassmannElement:
        return self.a * e.d_even(self.z) + self.b * e.d_odd(self.theta)

    def scale(self, c) -> "VectorFieldSC":
        return VectorFieldSC(self.a * c, self.b * c, self.z, self.theta)

    def bracket(self, other: "VectorFieldSC") -> "VectorFieldSC":
        """Super Lie bracket [X, Y] = X Y - (-1)^{|X||Y|} Y X, computed by
        applying both compositions to the coordinate functions."""
        px, py = self.parity(), other.parity()
        if px is None or py is None:
            raise ValueError("bracket requires homogeneous vector fields")
        sign = -1 if (px * py) % 2 else 1
        new_a = self.apply(other.a) - sign * other.apply(self.a)
        new_b = self.apply(other.b) - sign * other.apply(self.b)
        return VectorFieldSC(new_a, new_b, self.z, self.theta)

    def __eq__(self, other):
        return (
            isinstance(other, VectorFieldSC)
            and self.z == other.z
            and self.theta == other.theta
            and self.a == other.a
            and self.b == other.b
        )

    def __repr__(self):
        return f"({self.a!r}) d/d{self.z} + ({self.b!r}) d/d{self.theta}"


def superconformal_derivation(algebra: GrassmannAlgebra, z: sp.Symbol,
                              theta: str = "theta") -> VectorFieldSC:
    """D = d/dtheta + theta d/dz, the odd derivation whose square generates
    d/dz."""
    return VectorFieldSC(algebra.gen(theta), algebra.one(), z, theta)


def susy_generator_square(X: VectorFieldSC) -> VectorFieldSC:
    """(1/2)[X, X]; for X = D this is exactly d/dz."""
    return X.bracket(X).scale(sp.Rational(1, 2))


def grassmann_mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    """Product in the Grassmann algebra (Koszul sign rule)."""
    return a * b


def berezinian(M: SuperMatrix) -> GrassmannElement:
    return M.berezinian()


def bracket(X: VectorFieldSC, Y: VectorFieldSC) -> VectorFieldSC:
    return X.bracket(Y)


@dataclass
class SuperconformalReport:
    ok: bool
    residual: GrassmannElement
    jacobian_body_invertible: bool


def check_superconformal(zp: GrassmannElement, tp: GrassmannElement,
                         z: sp.Symbol, theta: str = "theta") -> SuperconformalReport:
    """Decide whether (z', theta') = (zp, tp) satisfies D z' = theta' D theta'.

    zp must be even and tp odd; the report carries the exact residual
    D z' - theta' D theta' and whether the body of dz'/dz is invertible
    (the change is a coordinate change to first order)."""
    if not zp.has_parity(0):
        raise ValueError("z' must be an even element")
    if not tp.has_parity(1):
        raise ValueError("theta' must be an odd element")
    alg = GrassmannAlgebra(zp.gens)
    D = superconformal_derivation(alg, z, theta)
    residual = D.apply(zp) - tp * D.apply(tp)
    jac_ok = not _expr_is_zero(zp.d_even(z).body())
    return SuperconformalReport(residual.is_zero(), residual, jac_ok)
