"""Integer Laurent polynomials in one variable, and Alexander polynomials of
torus knots and their cables.

Polynomials are stored as ``(min_exp, coeffs)`` with Python ints, so
arithmetic is exact at any degree.  Alexander polynomials are kept in the
normalized form: lowest exponent 0 and positive constant term.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


class LaurentPoly:
    __slots__ = ("min_exp", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        c = [int(x) for x in coeffs]
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        self.coeffs: tuple[int, ...] = tuple(c[lo:hi])
        self.min_exp: int = min_exp + lo if self.coeffs else 0

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> LaurentPoly:
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls([coeff], exp)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def degree(self) -> int:
        """Span of the exponents, ``max_exp - min_exp``."""
        if self.is_zero():
            raise ValueError("degree of the zero polynomial")
        return len(self.coeffs) - 1

    def coeff(self, exp: int) -> int:
        k = exp - self.min_exp
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in increasing exponent."""
        return [(self.min_exp + k, c) for k, c in enumerate(self.coeffs) if c]

    def exponents(self) -> list[int]:
        return [e for e, _ in self.terms()]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly([other])
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        return LaurentPoly([self.coeff(e) + other.coeff(e) for e in range(lo, hi + 1)], lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.min_exp)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.min_exp)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = LaurentPoly([1])
        for _ in range(n):
            result = result * self
        return result

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ``ValueError`` when a remainder is left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        dl = len(divisor.coeffs)
        if len(rem) < dl:
            if any(rem):
                raise ValueError("division is not exact")
            return LaurentPoly()
        quot = [0] * (len(rem) - dl + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = rem[k + dl - 1]
            if top % lead:
                raise ValueError("division is not exact over the integers")
            q = top // lead
            quot[k] = q
            if q:
                for j, d in enumerate(divisor.coeffs):
                    rem[k + j] -= q * d
        if any(rem):
            raise ValueError("division is not exact")
        return LaurentPoly(quot, self.min_exp - divisor.min_exp)

    def substitute_power(self, m: int) -> LaurentPoly:
        return substitute_power(self, m)

    def normalized(self) -> LaurentPoly:
        """Shift to lowest exponent 0 and make the constant term positive."""
        if self.is_zero():
            return self
        sign = -1 if self.coeffs[0] < 0 else 1
        return LaurentPoly([sign * c for c in self.coeffs], 0)

    def symmetrized(self) -> LaurentPoly:
        """View centred on exponent 0 (requires an even span)."""
        span = self.degree()
        if span % 2:
            raise ValueError("odd span cannot be centred")
        return LaurentPoly(self.coeffs, -span // 2)

    def is_symmetric(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __call__(self, t):
        return sum(c * t ** (self.min_exp + k) for k, c in enumerate(self.coeffs) if c)

    def __repr__(self):
        return f"LaurentPoly({list(self.coeffs)!r}, min_exp={self.min_exp})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ONE = LaurentPoly([1])


def _check_coprime(p: int, q: int) -> None:
    if gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) are not coprime")


def torus_alexander(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial of the (p, q) torus knot, normalized.

    Computed as the exact quotient (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
    """
    if p < 2 or q < 2:
        raise ValueError("torus knot parameters must be >= 2")
    _check_coprime(p, q)
    t = LaurentPoly.monomial(1)
    num = (LaurentPoly.monomial(p * q) - 1) * (t - 1)
    den = (LaurentPoly.monomial(p) - 1) * (LaurentPoly.monomial(q) - 1)
    return num.exact_div(den).normalized()


def substitute_power(f: LaurentPoly, m: int) -> LaurentPoly:
    """Return f(t^m)."""
    if m < 1:
        raise ValueError("substitution power must be positive")
    if f.is_zero() or m == 1:
        return f
    out = [0] * ((len(f.coeffs) - 1) * m + 1)
    for k, c in enumerate(f.coeffs):
        out[k * m] = c
    return LaurentPoly(out, f.min_exp * m)


def cable_alexander(base: LaurentPoly, p: int, q: int) -> LaurentPoly:
    """Alexander polynomial of the (p, q)-cable: Δ_K(t^p) · Δ_{T(p,q)}(t).

    ``p`` is the winding number; ``p == 1`` is the identity cable.
    """
    _check_coprime(p, q)
    if p == 1:
        return base.normalized()
    return (substitute_power(base, p) * torus_alexander(p, q)).normalized()


def family_alexander(n: int) -> LaurentPoly:
    """Δ of K_n, the (2, 4n-1)-cable of T(2, 2n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return cable_alexander(torus_alexander(2, 2 * n + 1), 2, 4 * n - 1)


def alternating_sum(terms: Sequence[int]) -> LaurentPoly:
    """Σ (-1)^k t^{terms[k]}; convenient for writing closed forms."""
    return LaurentPoly.from_dict({e: (-1) ** k for k, e in enumerate(terms)})
