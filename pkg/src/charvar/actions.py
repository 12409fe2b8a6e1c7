"""Torelli and Gamma_2 actions on cohomology: decomposition tables and derived spaces.

Only dimension data is computed.  For 1 != gamma in Gamma_2 the Prym piece
V(q, gamma) = Lambda^q W_gamma^- has dimension binom(2g-2, q), and there are
2^(2g) - 1 such gamma.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import NamedTuple

from .algebra import ZERO, IntPolynomial, RationalFunction, series_expand
from .formulas import (
    GenusParams,
    ab_equivariant_series,
    binom,
    genus,
    psu_poly,
    sl2c_equivariant_series,
)
from .strata import gamma2_invariant_strata


class InconsistentTable(ArithmeticError):
    """A decomposition row would have a negative invariant part."""


@dataclass(frozen=True)
class TorelliRow:
    degree: int
    total: int | None
    invariant: int | None
    prym: int
    torelli_trivial: bool
    prym_torelli_trivial: bool

    def __post_init__(self):
        if self.total is not None and self.invariant is not None:
            assert self.total == self.invariant + self.prym

    def as_dict(self) -> dict:
        return asdict(self)


def prym_dim(q: int, p: GenusParams | int) -> int:
    if q < 0:
        raise ValueError("q must be >= 0")
    return binom(2 * genus(p) - 2, q)


def even_index_set(p: GenusParams | int) -> list[int]:
    g = genus(p)
    return [2 * j for j in range(1, g - 1)]


def odd_index_set(p: GenusParams | int) -> list[int]:
    g = genus(p)
    return [2 * j - 1 for j in range(1, g)]


def prym_column(p: GenusParams | int, index_set: list[int]) -> IntPolynomial:
    """sum over q of (2^(2g)-1) binom(2g-2, q) t^(6g-6-q)."""
    g = genus(p)
    total = ZERO
    for q in index_set:
        total = total + IntPolynomial.monomial(6 * g - 6 - q, (4**g - 1) * prym_dim(q, g))
    return total


def kirwan_defect(p: GenusParams | int) -> IntPolynomial:
    """Graded dimensions of the kernels obstructing Kirwan surjectivity.

    Each sits one degree above the corresponding splitting degree 6g-6-q.
    """
    g = genus(p)
    return prym_column(g, even_index_set(g)).shift(1)


def default_table_truncation(p: GenusParams | int) -> int:
    g = genus(p)
    return max(4 * g, 6 * g - 6)


def torelli_table_equivariant_even(p: GenusParams | int, truncation: int | None = None) -> list[TorelliRow]:
    g = genus(p)
    if truncation is None:
        truncation = default_table_truncation(g)
    totals = series_expand(sl2c_equivariant_series(g), truncation)
    prym = prym_column(g, even_index_set(g))
    rows = []
    for k, total in enumerate(totals.dims):
        pr = prym[k]
        inv = total - pr
        if inv < 0:
            raise InconsistentTable(f"g={g}: degree {k} has total {total} < prym {pr}")
        rows.append(TorelliRow(k, total, inv, pr, torelli_trivial=pr == 0, prym_torelli_trivial=True))
    return rows


def torelli_table_odd(p: GenusParams | int) -> list[TorelliRow]:
    """Prym column for the odd-degree fixed-determinant moduli space.

    Totals are unknown here (the odd-degree Poincare polynomial is not
    reproduced), so ``total`` and ``invariant`` are ``None``.
    """
    g = genus(p)
    prym = prym_column(g, odd_index_set(g))
    return [
        TorelliRow(k, None, None, prym[k], torelli_trivial=prym[k] == 0, prym_torelli_trivial=True)
        for k in range(6 * g - 6 + 1)
    ]


def _jacobian_times_bu1(f: RationalFunction, g: int) -> RationalFunction:
    return f * RationalFunction(IntPolynomial([1, 1]) ** (2 * g), IntPolynomial([1, 0, -1]))


def tensor_nonfixed_equivariant(p: GenusParams | int) -> RationalFunction:
    """Equivariant series of the non-fixed-determinant character variety X.

    Gamma_2-invariant part of the fixed-determinant series, tensored with
    H(J0) and H(BU(1)).
    """
    g = genus(p)
    invariant = sl2c_equivariant_series(g) - prym_column(g, even_index_set(g))
    return _jacobian_times_bu1(invariant, g)


def r_equivariant_series(p: GenusParams | int) -> RationalFunction:
    g = genus(p)
    return _jacobian_times_bu1(ab_equivariant_series(g), g)


def psl_even_poincare(p: GenusParams | int) -> IntPolynomial:
    """Betti numbers of the even PSL(2,C) component, i.e. of M0(2,0)/Gamma_2.

    Assumes the stratification is Gamma_2-equivariant so invariants can be
    taken stratum by stratum: the minimum contributes all of P_t(R0) (Gamma_2
    acts trivially there) and each higher stratum only its S^n M part.
    """
    g = genus(p)
    return psu_poly(g) + gamma2_invariant_strata(g)


def ordinary_nonfixed(p: GenusParams | int) -> IntPolynomial:
    """P_t(M(2,0)) = P_t(M0(2,0))^Gamma_2 * (1+t)^2g."""
    g = genus(p)
    return psl_even_poincare(g) * IntPolynomial([1, 1]) ** (2 * g)


def ordinary_nonfixed_bundles(p: GenusParams | int) -> IntPolynomial:
    """P_t(N(2,0)) = P_t(N0(2,0)) * (1+t)^2g."""
    g = genus(p)
    return psu_poly(g) * IntPolynomial([1, 1]) ** (2 * g)


class Table1Row(NamedTuple):
    label: str
    latex: str
    trivial: bool
    reference: str


_TABLE1 = [
    ("H*_eq(X(π))", r"$H^\ast_{eq.}({\mathfrak X}(\pi))$", True, "Kirwan surjectivity, non-fixed determinant"),
    ("H*_eq(R(π))", r"$H^\ast_{eq.}({\mathfrak R}(\pi))$", True, "Atiyah-Bott"),
    ("H*(X(π))", r"$H^\ast({\mathfrak X}(\pi))$", False, "determinant fibration splitting"),
    ("H*(R(π))", r"$H^\ast({\mathfrak R}(\pi))$", False, "determinant fibration splitting"),
    ("H*_eq(X₀(π))", r"$H^\ast_{eq.}({\mathfrak X}_0(\pi))$", False, "Prym splitting of equivariant cohomology"),
    ("H*_eq(R₀(π))", r"$H^\ast_{eq.}({\mathfrak R}_0(\pi))$", True, "Atiyah-Bott"),
    ("H*(X₀(π))", r"$H^\ast({\mathfrak X}_0(\pi))$", False, "Prym-Torelli acts non-trivially (g>3)"),
    ("H*(R₀(π))", r"$H^\ast({\mathfrak R}_0(\pi))$", False, "Cappell-Lee-Miller"),
    ("H*(X̂_o(π))", r"$H^\ast(\widehat{\mathfrak X}_o(\pi))$", True, "projective representations"),
    ("H*(R̂_o(π))", r"$H^\ast(\widehat{\mathfrak R}_o(\pi))$", True, "projective representations"),
    ("H*(X̂_e(π))", r"$H^\ast(\widehat{\mathfrak X}_e(\pi))$", False, "projective representations"),
    ("H*(R̂_e(π))", r"$H^\ast(\widehat{\mathfrak R}_e(\pi))$", False, "projective representations"),
]


def paper_table1() -> list[Table1Row]:
    """Torelli triviality on each cohomology group, valid for g > 3."""
    return [Table1Row(*row) for row in _TABLE1]


def table1_lookup(label: str) -> Table1Row:
    for row in paper_table1():
        if row.label == label:
            return row
    raise KeyError(label)
