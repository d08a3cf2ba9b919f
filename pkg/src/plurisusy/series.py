"""Truncated Laurent series with exact field coefficients.

A TSeries represents sum_{k >= val} c_k t^k known exactly for all k < cut.
Coefficients are Fractions or QuadExt elements; all arithmetic is exact and
truncation windows are tracked so that no claimed coefficient is ever wrong.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence


class TSeries:
    __slots__ = ("val", "coeffs", "cut")

    def __init__(self, val: int, coeffs: Sequence, cut: int):
        coeffs = list(coeffs)
        assert len(coeffs) == cut - val, "window length mismatch"
        # strip leading zeros so val points at the first potentially
        # nonzero coefficient
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        self.val = val
        self.coeffs = coeffs
        self.cut = cut

    @staticmethod
    def zero(cut: int) -> "TSeries":
        return TSeries(cut, [], cut)

    @staticmethod
    def from_poly_coeffs(coeffs: Sequence, cut: int, val: int = 0) -> "TSeries":
        cs = list(coeffs)[: max(0, cut - val)]
        cs += [Fraction(0)] * (cut - val - len(cs))
        return TSeries(val, cs, cut)

    def is_empty(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        """Coefficient of t^k; k must be below the truncation cut."""
        if k >= self.cut:
            raise ValueError("coefficient beyond truncation window")
        if k < self.val:
            return Fraction(0)
        return self.coeffs[k - self.val]

    def first_nonzero(self) -> Optional[int]:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return self.val + i
        return None

    def __neg__(self):
        return TSeries(self.val, [-c for c in self.coeffs], self.cut)

    def __add__(self, other: "TSeries"):
        cut = min(self.cut, other.cut)
        val = min(self.val, other.val, cut)
        cs = [Fraction(0)] * (cut - val)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.val + i
                if k < cut:
                    cs[k - val] = cs[k - val] + c
        return TSeries(val, cs, cut)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "TSeries"):
        cut = min(self.val + other.cut, other.val + self.cut)
        if self.is_empty() or other.is_empty():
            return TSeries.zero(cut)
        val = self.val + other.val
        cs = [Fraction(0)] * (cut - val)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = self.val + i + other.val + j
                if k >= cut:
                    break
                cs[k - val] = cs[k - val] + a * b
        return TSeries(val, cs, cut)

    def scale(self, c):
        if c == 0:
            return TSeries.zero(self.cut)
        return TSeries(self.val, [c * a for a in self.coeffs], self.cut)

    def shift(self, k: int) -> "TSeries":
        """Multiply by t^k."""
        return TSeries(self.val + k, list(self.coeffs), self.cut + k)

    def inverse(self) -> "TSeries":
        """Multiplicative inverse; the leading coefficient must be a unit and
        exactly known (a series that vanishes through its whole window has no
        computable inverse)."""
        if self.is_empty() or self.coeffs[0] == 0:
            raise ZeroDivisionError("series with unknown or zero leading term")
        n = self.cut - self.val
        lead_inv = Fraction(1) / self.coeffs[0]
        out: List = [lead_inv] + [Fraction(0)] * (n - 1)
        for k in range(1, n):
            acc = Fraction(0)
            for i in range(1, k + 1):
                ci = self.coeffs[i] if i < len(self.coeffs) else Fraction(0)
                acc = acc + ci * out[k - i]
            out[k] = -lead_inv * acc
        return TSeries(-self.val, out, -self.val + n)

    def __truediv__(self, other: "TSeries"):
        return self * other.inverse()

    def sqrt_with(self, root0) -> "TSeries":
        """Square root with prescribed leading root: val must be even and
        root0*root0 must equal the leading coefficient."""
        if self.is_empty():
            raise ValueError("cannot take sqrt of a series with empty window")
        if self.val % 2:
            raise ValueError("odd valuation has no series square root")
        c0 = self.coeffs[0]
        assert root0 * root0 == c0, "prescribed root does not square to the leading term"
        n = self.cut - self.val
        inv2r = Fraction(1) / (root0 + root0)
        out: List = [root0] + [Fraction(0)] * (n - 1)
        for k in range(1, n):
            acc = self.coeffs[k] if k < len(self.coeffs) else Fraction(0)
            for i in range(1, k):
                acc = acc - out[i] * out[k - i]
            out[k] = inv2r * acc
        half = self.val // 2
        return TSeries(half, out, half + n)

    def __repr__(self):
        terms = ", ".join(f"t^{self.val + i}: {c}" for i, c in enumerate(self.coeffs))
        return f"TSeries[{terms} | O(t^{self.cut})]"
