"""Closed-form Poincare polynomials and series, parameterized by the genus.

Every rational expression is assembled over a common denominator with exact
integer arithmetic (the 1/2 and 1/4 scalars go into the denominator) and then
certified to be an integer polynomial by exact division.  A failed
certification raises, it never returns a silently wrong polynomial.
"""
from __future__ import annotations

import contextlib
from contextvars import ContextVar
from dataclasses import dataclass
from math import comb

from .algebra import (
    ONE,
    IntPolynomial,
    NotDivisible,
    RationalFunction,
)

#: Genus bound used by the CLI to keep output bounded.  Arithmetic has no cap.
DEFAULT_GENUS_CAP = 64

FAULTS = ("c-exponent", "c-drop-term", "irr-printed")
_fault: ContextVar[str | None] = ContextVar("charvar_formula_fault", default=None)


@contextlib.contextmanager
def formula_fault(kind: str | None):
    """Deliberately corrupt one formula inside the ``with`` block (test hook).

    ``c-exponent``  uses t^(4g-2) in the last term of C(t,g), which is still a
                    polynomial but disagrees with the stratum sum;
    ``c-drop-term`` drops the (1-t)^(2g) term of C(t,g), which is no longer a
                    polynomial;
    ``irr-printed`` uses the exponents t^(2k-e)(1-t^(k+e)) in the k-sum of
                    P_t(R0^irr), which fails to be a nonnegative
                    integer polynomial.
    """
    if kind is not None and kind not in FAULTS:
        raise ValueError(f"unknown fault {kind!r}; expected one of {FAULTS}")
    token = _fault.set(kind)
    try:
        yield
    finally:
        _fault.reset(token)


class BettiViolation(ArithmeticError):
    """A quantity with Betti-number semantics has a negative coefficient."""


@dataclass(frozen=True)
class GenusParams:
    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or isinstance(self.g, bool):
            raise TypeError("genus must be an int")
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")

    @property
    def complex_dim(self) -> int:
        return 6 * self.g - 6

    @property
    def gamma2_order(self) -> int:
        return 4**self.g


def genus(p: GenusParams | int) -> int:
    """Validate and unwrap a genus given either as an int or as GenusParams."""
    if isinstance(p, GenusParams):
        return p.g
    return GenusParams(p).g


def _poly(*coeffs: int) -> IntPolynomial:
    return IntPolynomial(coeffs)


def _one_minus_t_pow(k: int, n: int = 1) -> IntPolynomial:
    return (_poly(1) - IntPolynomial.monomial(k)) ** n


def certify(f: RationalFunction, term: str) -> IntPolynomial:
    """Exact-divide ``f``; on failure tag the exception with ``term`` and re-raise."""
    try:
        return f.to_polynomial()
    except NotDivisible as exc:
        exc.term = term
        raise


def require_nonnegative(p: IntPolynomial, term: str) -> IntPolynomial:
    neg = [k for k, c in enumerate(p.coeffs) if c < 0]
    if neg:
        raise BettiViolation(f"{term}: coefficient {p[neg[0]]} at t^{neg[0]} is negative")
    return p


def ab_equivariant_series(p: GenusParams | int) -> RationalFunction:
    """Equivariant Poincare series of the semistable fixed-determinant connections.

    ((1+t^3)^2g - t^(2g+2) (1+t)^2g) / ((1-t^2)(1-t^4)).  The same series is
    used in the semistable role when forming the SL(2,C)-equivariant series.
    """
    g = genus(p)
    num = (_poly(1, 0, 0, 1)) ** (2 * g) - (_poly(1, 1) ** (2 * g)).shift(2 * g + 2)
    return RationalFunction(num, _one_minus_t_pow(2) * _one_minus_t_pow(4))


def c_rational(p: GenusParams | int) -> RationalFunction:
    """The correction term C(t,g) as an unreduced rational function."""
    g = genus(p)
    fault = _fault.get()
    one_plus = _poly(1, 1) ** (2 * g)
    one_minus = _poly(1, -1) ** (2 * g)
    low = IntPolynomial.monomial(4 * g - 4)

    terms = [
        RationalFunction(-low),
        RationalFunction(one_plus.shift(2 * g + 2), _one_minus_t_pow(2) * _one_minus_t_pow(4)),
    ]
    if fault != "c-drop-term":
        terms.append(RationalFunction(one_minus * low, _poly(4, 0, 4)))
    bracket = (
        RationalFunction(_poly(2 * g), _poly(1, 1))
        + RationalFunction(ONE, _poly(-1, 0, 1))
        + RationalFunction(_poly(5 - 4 * g), _poly(2))
    )
    terms.append(RationalFunction(one_plus * low, _poly(2, 0, -2)) * bracket)
    prym_shift = 4 * g - 2 if fault == "c-exponent" else 4 * g - 4
    evens = _poly(1, 1) ** (2 * g - 2) + _poly(1, -1) ** (2 * g - 2) - 2
    terms.append(RationalFunction((4**g - 1) * evens.shift(prym_shift), _poly(2)))

    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def c_poly_closed(p: GenusParams | int) -> IntPolynomial:
    """C(t,g) from its closed form, certified to be an integer polynomial."""
    g = genus(p)
    return certify(c_rational(g), f"C(t,{g})")


def reducible_equivariant_series(p: GenusParams | int) -> RationalFunction:
    """Equivariant series of the reducible locus: Z/2-invariants of H(T^2g) (x) H(BU(1))."""
    g = genus(p)
    num = _poly(1, 1) ** (2 * g) * _poly(1, 0, 1) + _poly(1, -1) ** (2 * g) * _poly(1, 0, -1)
    return RationalFunction(num, 2 * _one_minus_t_pow(4))


def parity_eps(k: int) -> int:
    """0 for even ``k``, 1 for odd ``k``."""
    return k % 2


def irr_k_sum(p: GenusParams | int) -> RationalFunction:
    """The sum over 2 <= k <= g correcting for the restriction to the reducibles.

    The k-th summand is (1+t) times the Poincare series of the part of the
    reducible locus' equivariant cohomology in Lefschetz-primitive degree k
    that the restriction map misses.
    """
    g = genus(p)
    printed = _fault.get() == "irr-printed"
    den = _one_minus_t_pow(1) * _one_minus_t_pow(4)
    num = IntPolynomial()
    for k in range(2, g + 1):
        eps = parity_eps(k)
        if printed:
            shift, top = 2 * k - eps, k + eps
        else:
            shift, top = k + 2 * eps, 2 * k - 2 * eps
        weight = comb(2 * g, k) - comb(2 * g, k - 2)
        num = num + weight * (_one_minus_t_pow(top) * _one_minus_t_pow(2 * g - 2 * k + 2)).shift(shift)
    return RationalFunction(num, den)


def psu_irr_poly(p: GenusParams | int) -> IntPolynomial:
    """Poincare polynomial of the pair (R0, reducibles), i.e. H_c of the irreducible locus.

    Constant term 0 and top term t^(6g-6); by Poincare duality its reversal
    gives the Betti numbers of the (open) irreducible locus itself.
    """
    g = genus(p)
    f = ab_equivariant_series(g) - reducible_equivariant_series(g) + irr_k_sum(g)
    return require_nonnegative(certify(f, f"P_t(R0^irr) at g={g}"), f"P_t(R0^irr) at g={g}")


def psu_poly(p: GenusParams | int) -> IntPolynomial:
    """Poincare polynomial of the SU(2) representation variety R0 (= N0(2,0))."""
    g = genus(p)
    kummer = RationalFunction((_poly(1, 1) ** (2 * g) + _poly(1, -1) ** (2 * g)).shift(1), _poly(2))
    geometric = RationalFunction(_one_minus_t_pow(2 * g + 2), _one_minus_t_pow(1))
    f = RationalFunction(psu_irr_poly(g)) - kummer + geometric
    return require_nonnegative(certify(f, f"P_t(R0) at g={g}"), f"P_t(R0) at g={g}")


def x0_poly(p: GenusParams | int) -> IntPolynomial:
    """Poincare polynomial of the SL(2,C) character variety X0."""
    g = genus(p)
    return psu_poly(g) + c_poly_closed(g)


def x0_irr_poly(p: GenusParams | int) -> IntPolynomial:
    """psu_irr_poly + C(t,g): the irreducible locus of X0 in the same convention."""
    g = genus(p)
    return psu_irr_poly(g) + c_poly_closed(g)


def sl2c_equivariant_series(p: GenusParams | int) -> RationalFunction:
    g = genus(p)
    return ab_equivariant_series(g) + c_poly_closed(g)


def binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
