"""Exact rational scalars and dense polynomials in one variable.

Everything downstream (series, triangles, identity checks) runs over these
types, so every value the package produces is exact.  Scalars are
fractions.Fraction; polynomials are immutable dense coefficient tuples over
Fraction.  There is no floating point anywhere in the computational core.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" with an optional leading sign.

    Only exact integer or integer/integer strings are accepted; decimal
    and exponent notation are rejected so that a typo can never silently
    change the mathematical object being computed.
    """
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ValueError(f"not an exact rational: {text!r}")
    num, _, den = s.partition("/")
    if den:
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def format_rational(value: Scalar) -> str:
    """Reduced "p/q" (or "p") rendering used by every serializer."""
    return str(Fraction(value))


class Poly:
    """Dense univariate polynomial over Fraction.

    ``coeffs[i]`` is the coefficient of x**i.  Instances are immutable.
    The coefficient tuple never ends in a zero; the zero polynomial is the
    empty tuple, and its degree is None rather than -1 so that degree
    arithmetic can never be silently wrong.

    Scalars (int, Fraction) coerce in arithmetic and comparisons, which is
    what lets generic "Rational-or-Poly" code run unchanged over either
    coefficient ring.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x**i (zero outside the stored range)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take a nonnegative integer exponent")
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # constants hash like the scalar they equal
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    term = xs
                elif c == -1:
                    term = "-" + xs
                else:
                    term = f"{c}*{xs}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


#: the polynomial variable, for building symbolic-x expressions
X = Poly((0, 1))


def gfact_falling(x0, n: int, lam) -> "Fraction | Poly":
    """Generalized falling factorial x0*(x0-lam)*(x0-2*lam)*...*(x0-(n-1)*lam).

    The empty product (n == 0) is the multiplicative identity of the ring
    x0 lives in.  x0 may be a scalar or a Poly; at lam == 0 this is x0**n.
    """
    if n < 0:
        raise ValueError("length of the falling-factorial product must be >= 0")
    lam = Fraction(lam)
    acc = Poly.constant(1) if isinstance(x0, Poly) else Fraction(1)
    for j in range(n):
        acc = acc * (x0 - j * lam)
    return acc


def gfact_rising(x0, n: int, lam) -> "Fraction | Poly":
    """Rising analogue x0*(x0+lam)*...*(x0+(n-1)*lam); 1 when n == 0."""
    if n < 0:
        raise ValueError("length of the rising-factorial product must be >= 0")
    lam = Fraction(lam)
    acc = Poly.constant(1) if isinstance(x0, Poly) else Fraction(1)
    for j in range(n):
        acc = acc * (x0 + j * lam)
    return acc


def ffact_int(x0, n: int) -> "Fraction | Poly":
    """Ordinary falling factorial x0*(x0-1)*...*(x0-n+1)."""
    return gfact_falling(x0, n, Fraction(1))


def binom_poly(k: int) -> Poly:
    """binom(x, k) as an exact polynomial of degree k."""
    if k < 0:
        raise ValueError("binomial index must be >= 0")
    return ffact_int(X, k) * Fraction(1, factorial(k))


def dfact(k: int, lam) -> Fraction:
    """Product (lam-1)(lam-2)...(lam-k); 1 when k == 0.

    This is the singularity-free form of the coefficient products that
    otherwise carry a literal 1/lam: for lam != 0,
    dfact(k-1, lam) == lam**(k-1) * (1)_{k, 1/lam}, and at lam == 0 it
    degenerates continuously to (-1)**k * k!.
    """
    if k < 0:
        raise ValueError("dfact index must be >= 0")
    lam = Fraction(lam)
    acc = Fraction(1)
    for j in range(1, k + 1):
        acc *= lam - j
    return acc


def poly_derivative(p: Poly) -> Poly:
    """Formal derivative."""
    return Poly(tuple(c * i for i, c in enumerate(p.coeffs) if i >= 1))


def poly_int_over_t(p: Poly) -> Poly:
    """Integral of p(t)/t from 0 to x: sum of c_k x**k / k.

    The constant coefficient must vanish; otherwise the integral has a
    logarithmic term and is not a polynomial.
    """
    if p.coeff(0) != 0:
        raise ValueError("logarithmic divergence: nonzero constant term")
    return Poly((Fraction(0),) + tuple(c / k for k, c in enumerate(p.coeffs) if k >= 1))


def poly_eval(p: Poly, x0) -> Fraction:
    """Exact Horner evaluation."""
    x0 = Fraction(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc
