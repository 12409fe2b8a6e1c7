"""Poincare polynomials assembled from the circle-action stratification.

The critical sets above the minimum are 2^(2g)-sheeted covers of symmetric
products S^n M, n = 2g-2-2d, sitting at Morse index 2*mu_d = 2g+4d-2.  Betti
numbers of S^n M come from Macdonald's generating function

    sum_n P_t(S^n M) x^n = (1 + x t)^(2g) / ((1 - x)(1 - x t^2)),

expanded here as a power series in x whose coefficients are polynomials in t.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import ONE, ZERO, IntPolynomial
from .formulas import GenusParams, genus, psu_poly

XSeries = list[IntPolynomial]


@dataclass(frozen=True)
class StratumSpec:
    """Stratum ``d`` (1 <= d <= g-1) of the fixed-determinant Higgs moduli space."""

    g: int
    d: int

    def __post_init__(self):
        if not 1 <= self.d <= self.g - 1:
            raise ValueError(f"stratum index {self.d} outside 1..{self.g - 1}")
        n = self.n
        assert n >= 0 and n % 2 == 0
        assert 2 * self.mu_d == 2 * self.g + 4 * self.d - 2
        assert 2 * self.mu_d + 2 * n == 6 * self.g - 6

    @property
    def mu_d(self) -> int:
        return self.g - 1 + 2 * self.d

    @property
    def n(self) -> int:
        return 2 * self.g - 2 - 2 * self.d

    @property
    def shift(self) -> int:
        return 2 * self.mu_d


def strata(p: GenusParams | int) -> list[StratumSpec]:
    g = genus(p)
    return [StratumSpec(g, d) for d in range(1, g)]


def _x_mul(a: XSeries, b: XSeries, order: int) -> XSeries:
    out = [ZERO] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] = out[i + j] + ai * bj
    return out


def macdonald_series(g: int, order: int) -> XSeries:
    """Coefficients of x^0 .. x^order in (1+xt)^2g / ((1-x)(1-xt^2))."""
    numerator = [IntPolynomial.monomial(j, comb(2 * g, j)) for j in range(min(2 * g, order) + 1)]
    numerator += [ZERO] * (order + 1 - len(numerator))
    geometric = [ONE] * (order + 1)
    geometric_t2 = [IntPolynomial.monomial(2 * j) for j in range(order + 1)]
    return _x_mul(_x_mul(numerator, geometric, order), geometric_t2, order)


def sym_product_poincare(n: int, p: GenusParams | int) -> IntPolynomial:
    """P_t(S^n M)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return macdonald_series(genus(p), n)[n]


def prym_cover_poincare(n: int, p: GenusParams | int) -> IntPolynomial:
    """P_t of the Gamma_2 cover of S^n M.

    Each of the 2^(2g)-1 nontrivial characters contributes Lambda^n of a
    (2g-2)-dimensional space, all in the middle degree n.
    """
    g = genus(p)
    return sym_product_poincare(n, g) + IntPolynomial.monomial(n, (4**g - 1) * comb(2 * g - 2, n))


def c_poly_strata(p: GenusParams | int) -> IntPolynomial:
    """C(t,g) as the sum of the non-minimal strata contributions."""
    g = genus(p)
    total = ZERO
    for s in strata(g):
        total = total + prym_cover_poincare(s.n, g).shift(s.shift)
    return total


def gamma2_invariant_strata(p: GenusParams | int) -> IntPolynomial:
    """Gamma_2-invariant part of the strata sum: the Prym corrections dropped."""
    g = genus(p)
    total = ZERO
    for s in strata(g):
        total = total + sym_product_poincare(s.n, g).shift(s.shift)
    return total


def m0_poincare_via_strata(p: GenusParams | int) -> IntPolynomial:
    """P_t(M0(2,0)) = P_t(N0(2,0)) + stratum sum, with N0(2,0) = R0."""
    g = genus(p)
    return psu_poly(g) + c_poly_strata(g)
