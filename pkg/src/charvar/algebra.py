"""Exact univariate arithmetic over the integers in one variable ``t``.

Polynomials are stored densely (index = degree) with Python ints, so there is
no overflow anywhere.  Rational functions are deliberately left unreduced:
nothing downstream needs a gcd, it either divides exactly or expands a series.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

#: Degree reported for the zero polynomial.  Not an int, so it can never be
#: used as an index, but it still orders below every real degree and makes
#: ``deg(a*b) == deg(a) + deg(b)`` hold when one factor is zero.
ZERO_DEGREE = float("-inf")


class NotDivisible(ArithmeticError):
    """Raised by :func:`poly_divexact` when the quotient is not an integer polynomial.

    ``reason`` is ``"remainder"`` when the rational division leaves a nonzero
    remainder and ``"non-integral"`` when it divides but the quotient has a
    non-integer coefficient.
    """

    def __init__(self, reason: str, num: "IntPolynomial", den: "IntPolynomial", detail: str = ""):
        self.reason = reason
        self.num = num
        self.den = den
        self.detail = detail
        msg = f"{reason}: ({num}) / ({den})"
        if detail:
            msg += f" [{detail}]"
        super().__init__(msg)


class IntegralityViolation(ArithmeticError):
    """A coefficient that must be an integer is not."""


class NotASeries(ValueError):
    """The denominator vanishes at t = 0, so there is no Taylor expansion."""


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise IntegralityViolation(f"non-integer coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
            cs.append(int(c))
        object.__setattr__(self, "coeffs", _trim(cs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("negative degree")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _lift(other)
        return NotImplemented if other is NotImplemented else poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _lift(other)
        return NotImplemented if other is NotImplemented else poly_add(self, -other)

    def __rsub__(self, other):
        other = _lift(other)
        return NotImplemented if other is NotImplemented else poly_add(other, -self)

    def __mul__(self, other):
        other = _lift(other)
        return NotImplemented if other is NotImplemented else poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return poly_pow(self, n)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``t**k``."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def reversed(self, degree: int) -> "IntPolynomial":
        """Return ``t**degree * p(1/t)``; requires ``degree >= deg p``."""
        if self.degree > degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return IntPolynomial(reversed(padded))

    def is_palindromic(self, degree: int) -> bool:
        return self.reversed(degree) == self

    def dense(self, length: int) -> list[int]:
        """Coefficients for degrees ``0 .. length-1`` (zero padded)."""
        return [self[k] for k in range(length)]

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c in (1, -1):
                term = ("-" if c < 0 else "") + mono
            else:
                term = f"{c}{'*' if mono else ''}{mono}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def _lift(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return NotImplemented


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPolynomial(a[k] + b[k] for k in range(n))


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPolynomial(out)


def poly_pow(base: IntPolynomial, n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("negative exponent")
    result, sq = ONE, base
    while n:
        if n & 1:
            result = poly_mul(result, sq)
        n >>= 1
        if n:
            sq = poly_mul(sq, sq)
    return result


def poly_divmod_rational(num: IntPolynomial, den: IntPolynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over Q; returns (quotient, remainder) coefficient lists."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in num.coeffs]
    dd = len(den.coeffs) - 1
    lead = den.leading
    if len(rem) <= dd:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k] / lead
        if c:
            quot[k - dd] = c
            for j, dc in enumerate(den.coeffs):
                rem[k - dd + j] -= c * dc
    return quot, rem[:dd]


def poly_divexact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``q * den == num`` exactly, or raise :class:`NotDivisible`."""
    quot, rem = poly_divmod_rational(num, den)
    if any(rem):
        k = max(i for i, r in enumerate(rem) if r)
        raise NotDivisible("remainder", num, den, f"remainder nonzero at t^{k}")
    bad = [k for k, c in enumerate(quot) if c.denominator != 1]
    if bad:
        raise NotDivisible("non-integral", num, den, f"quotient coefficient {quot[bad[0]]} at t^{bad[0]}")
    return IntPolynomial(c.numerator for c in quot)


@dataclass(frozen=True, init=False, eq=False)
class RationalFunction:
    """``numerator / denominator``, unreduced, with positive leading denominator coefficient.

    ``==`` is cross-multiplication (see :func:`rat_equal`), so the class is not
    hashable.
    """

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __init__(self, numerator, denominator=ONE):
        numerator, denominator = _lift(numerator), _lift(denominator)
        if numerator is NotImplemented or denominator is NotImplemented:
            raise TypeError("RationalFunction parts must be IntPolynomial or int")
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        if denominator.leading < 0:
            numerator, denominator = -numerator, -denominator
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    __hash__ = None  # type: ignore[assignment]

    def __eq__(self, other):
        if isinstance(other, (IntPolynomial, int)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return rat_equal(self, other)

    def __add__(self, other):
        other = _as_rat(other)
        if other.denominator == self.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-_as_rat(other))

    def __rsub__(self, other):
        return _as_rat(other) + (-self)

    def __mul__(self, other):
        other = _as_rat(other)
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rat(other)
        return RationalFunction(self.numerator * other.denominator, self.denominator * other.numerator)

    def to_polynomial(self) -> IntPolynomial:
        """Certify that this is an integer polynomial and return it."""
        return poly_divexact(self.numerator, self.denominator)

    def __repr__(self):
        return f"RationalFunction(({self.numerator}) / ({self.denominator}))"


def _as_rat(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (IntPolynomial, int)):
        return RationalFunction(x)
    raise TypeError(f"cannot combine RationalFunction with {type(x).__name__}")


def rat_equal(f: RationalFunction, g: RationalFunction) -> bool:
    return f.numerator * g.denominator == g.numerator * f.denominator


@dataclass(frozen=True)
class GradedDims:
    """Per-degree dimensions for degrees ``0 .. truncation_order``.

    ``exact`` means the underlying object is a polynomial of degree at most
    ``truncation_order``, so no information was cut off.
    """

    dims: tuple[int, ...]
    truncation_order: int
    exact: bool = False

    def __post_init__(self):
        if len(self.dims) != self.truncation_order + 1:
            raise ValueError("dims length must be truncation_order + 1")

    @classmethod
    def from_polynomial(cls, p: IntPolynomial, order: int | None = None) -> "GradedDims":
        if order is None:
            order = max(int(p.degree), 0) if not p.is_zero() else 0
        return cls(tuple(p.dense(order + 1)), order, exact=p.degree <= order)

    def is_nonnegative(self) -> bool:
        return all(d >= 0 for d in self.dims)

    def truncate(self, order: int) -> "GradedDims":
        if order > self.truncation_order:
            raise ValueError("cannot extend a truncation")
        tail_zero = self.exact and not any(self.dims[order + 1:])
        return GradedDims(self.dims[: order + 1], order, exact=tail_zero)

    def __getitem__(self, k: int) -> int:
        return self.dims[k]

    def __len__(self):
        return len(self.dims)


def series_expand(f: RationalFunction, order: int) -> GradedDims:
    """First ``order + 1`` Taylor coefficients of ``f`` at ``t = 0``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    num, den = f.numerator, f.denominator
    d0 = den[0]
    if d0 == 0:
        raise NotASeries(f"denominator {den} vanishes at t = 0")
    out: list[int] = []
    for n in range(order + 1):
        acc = num[n]
        for k in range(1, min(n, len(den.coeffs) - 1) + 1):
            acc -= den.coeffs[k] * out[n - k]
        q, r = divmod(acc, d0)
        if r:
            raise IntegralityViolation(f"Taylor coefficient {Fraction(acc, d0)} at t^{n} is not an integer")
        out.append(q)
    trunc = IntPolynomial(out)
    return GradedDims(tuple(out), order, exact=trunc * den == num)
