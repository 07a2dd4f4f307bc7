"""Truncated formal power series in t over an exact coefficient ring.

Coefficients are Fraction or Poly (polynomials in x); the two rings mix
through ordinary arithmetic coercion, so a series over rationals can be
multiplied into a series over polynomials without ceremony.  Every series
carries its truncation order explicitly, and binary operations re-truncate
to the smaller order, so an equality between two Series always states the
exact order to which it was verified.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from .algebra import Poly

_SCALARS = (int, Fraction, Poly)


def _is_zero(c) -> bool:
    return c == 0


class Series:
    """Coefficients c_0..c_N of a power series truncated at order N."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None) -> None:
        cs = [c if isinstance(c, (Fraction, Poly)) else Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("an empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(cs) < order + 1:
            cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        else:
            del cs[order + 1 :]
        self.coeffs = tuple(cs)
        self.order = order

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a series beyond its truncation order")
        return Series(self.coeffs[: order + 1], order)

    def map(self, fn: Callable) -> "Series":
        """Apply fn to every coefficient (e.g. evaluate Poly coefficients)."""
        return Series(tuple(fn(c) for c in self.coeffs), self.order)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return None

    def __add__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            return Series(
                tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), n
            )
        if isinstance(other, _SCALARS):
            return Series((self.coeffs[0] + other,) + self.coeffs[1:], self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Series(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, (Series, *_SCALARS)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _SCALARS):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = []
            for m in range(n + 1):
                out.append(sum(a[i] * b[m - i] for i in range(m + 1)))
            return Series(out, n)
        if isinstance(other, _SCALARS):
            return Series(tuple(c * other for c in self.coeffs), self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take a nonnegative integer exponent")
        out = Series((Fraction(1),), self.order)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __str__(self):
        return f"Series(order={self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    __repr__ = __str__


def identity_series(order: int) -> Series:
    """The series t."""
    return Series((0, 1), order)


def ser_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to min(a.order, b.order)."""
    return a * b


def _unit_inverse(c):
    if isinstance(c, Poly):
        if c.degree == 0:
            return Poly.constant(1 / c.coeff(0))
        raise ValueError("unit required: constant term is not invertible")
    c = Fraction(c)
    if c == 0:
        raise ValueError("unit required: constant term is not invertible")
    return 1 / c


def ser_reciprocal(a: Series) -> Series:
    """Multiplicative inverse: b with a*b == 1 to order a.order.

    The constant term must be a unit of the coefficient ring (a nonzero
    rational, or a nonzero constant polynomial).
    """
    inv0 = _unit_inverse(a.coeffs[0])
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = sum(a.coeffs[j] * out[n - j] for j in range(1, n + 1))
        out.append(-(inv0 * acc))
    return Series(out, a.order)


def ser_compose(outer: Series, inner: Series) -> Series:
    """outer(inner(t)) by Horner evaluation over series.

    inner must have valuation >= 1.  The result order is the largest order
    the two truncations determine: min(inner.order, v*(outer.order+1) - 1)
    where v is inner's valuation, which reduces to min(orders) for v == 1.
    """
    if not _is_zero(inner.coeffs[0]):
        raise ValueError("composition needs valuation >= 1")
    v = inner.valuation()
    if v is None:
        return Series((outer.coeffs[0],), inner.order)
    order = min(inner.order, v * (outer.order + 1) - 1)
    inner = inner.truncate(order)
    acc = Series((outer.coeffs[outer.order],), order)
    for k in range(outer.order - 1, -1, -1):
        acc = acc * inner + outer.coeffs[k]
    return acc


def ser_comp_inverse(a: Series) -> Series:
    """Compositional inverse: b with a(b(t)) == t to order a.order.

    Solved coefficient by coefficient (only the linear term of a couples
    the new unknown at each order), then validated against ser_compose.
    Requires c_0 == 0 and invertible c_1.
    """
    if a.order < 1 or not _is_zero(a.coeffs[0]):
        raise ValueError("compositional inverse needs valuation exactly 1")
    inv1 = _unit_inverse(a.coeffs[1])
    n = a.order
    out = [Fraction(0)] * (n + 1)
    out[1] = inv1
    for m in range(2, n + 1):
        residue = ser_compose(a, Series(out, n)).coeffs[m]
        out[m] = -(inv1 * residue)
    result = Series(out, n)
    assert ser_compose(a, result) == identity_series(n)
    return result


def ser_shift_down(a: Series) -> Series:
    """Divide by t: requires a zero constant term, drops one order."""
    if not _is_zero(a.coeffs[0]):
        raise ValueError("division by t needs a zero constant term")
    if a.order < 1:
        raise ValueError("division by t needs order >= 1")
    return Series(a.coeffs[1:], a.order - 1)


def dexp(x0, lam, order: int) -> Series:
    """Degenerate exponential: coefficient of t**k is (x0)_{k,lam} / k!.

    x0 may be a rational or a Poly (for the symbolic-exponent series).
    At lam == 0 this is the classical exp(x0*t).
    """
    lam = Fraction(lam)
    acc = Poly.constant(1) if isinstance(x0, Poly) else Fraction(1)
    out = []
    for k in range(order + 1):
        out.append(acc * Fraction(1, factorial(k)))
        acc = acc * (x0 - k * lam)
    return Series(out, order)


def dlog(lam, order: int) -> Series:
    """Degenerate logarithm of 1+t: the compositional inverse of dexp(1,lam)-1.

    Coefficient of t**k is dfact(k-1, lam) / k!; lam == 0 gives log(1+t).
    """
    lam = Fraction(lam)
    out = [Fraction(0)]
    acc = Fraction(1)
    for k in range(1, order + 1):
        out.append(acc / factorial(k))
        acc *= lam - k
    return Series(out, order)


def binom_series(x0, order: int) -> Series:
    """(1+t)**x0: coefficient of t**k is binom(x0, k)."""
    acc = Poly.constant(1) if isinstance(x0, Poly) else Fraction(1)
    out = []
    for k in range(order + 1):
        out.append(acc * Fraction(1, factorial(k)))
        acc = acc * (x0 - k)
    return Series(out, order)


def dpolylog(k: int, lam, order: int) -> Series:
    """Degenerate polylogarithm of weight k.

    Coefficient of t**n (n >= 1) is (-1)**(n-1) * dfact(n-1,lam) / ((n-1)! n**k);
    weight 1 is -log_lam(1-t), and lam == 0, k == 2 is the classical dilogarithm.
    """
    lam = Fraction(lam)
    out = [Fraction(0)]
    acc = Fraction(1)
    sign = 1
    for n in range(1, order + 1):
        out.append(acc * sign / (factorial(n - 1) * Fraction(n) ** k))
        acc *= lam - n
        sign = -sign
    return Series(out, order)
