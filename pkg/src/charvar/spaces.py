"""Registry of the spaces the engine knows and how each one is computed."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from . import actions, formulas, strata
from .algebra import IntPolynomial, RationalFunction


class SpaceId(enum.Enum):
    R0 = "R0"
    R0_IRR = "R0irr"
    X0 = "X0"
    X0_IRR = "X0irr"
    X0_EQ = "X0eq"
    X_EQ = "Xeq"
    R_EQ = "Req"
    X_ORD = "X"
    R_ORD = "R"
    N0_20 = "N0"
    M0_20 = "M0"
    PSL_EVEN = "PSLeven"
    PSL_ODD = "PSLodd"
    SYM_PROD = "SymProd"
    PRYM_COVER = "PrymCover"

    @classmethod
    def parse(cls, text: str) -> "SpaceId":
        key = text.replace("_", "").replace("-", "").lower()
        for member in cls:
            if member.value.lower() == key:
                return member
        raise ValueError(f"unknown space {text!r}; choose from {', '.join(m.value for m in cls)}")


@dataclass(frozen=True)
class Route:
    kind: str  # "poly", "series" or "flags"
    compute: Callable | None
    provenance: tuple[tuple[str, str], ...]
    needs_n: bool = False


_C = ("C(t,g)", "closed form certified by exact division; equals the stratum sum")
_R0 = ("P_t(R0)", "CLM-type formula: equivariant restriction to reducibles, certified polynomial")
_IRR = ("P_t(R0^irr)", "H*(R0, reducibles); Atiyah-Bott series minus reducible series plus cokernel sum")
_AB = ("P_t^eq(A0ss)", "Atiyah-Bott equivariant series of semistable bundles")

ROUTES: dict[SpaceId, Route] = {
    SpaceId.R0: Route("poly", formulas.psu_poly, (_R0,)),
    SpaceId.R0_IRR: Route("poly", formulas.psu_irr_poly, (_IRR,)),
    SpaceId.X0: Route("poly", formulas.x0_poly, (_R0, _C, ("P_t(X0)", "P_t(R0) + C(t,g)"))),
    SpaceId.X0_IRR: Route("poly", formulas.x0_irr_poly, (_IRR, _C, ("P_t(X0^irr)", "P_t(R0^irr) + C(t,g)"))),
    SpaceId.X0_EQ: Route(
        "series",
        formulas.sl2c_equivariant_series,
        (_AB, _C, ("P_t^SL2C(Hom)", "Atiyah-Bott series + C(t,g)")),
    ),
    SpaceId.X_EQ: Route(
        "series",
        actions.tensor_nonfixed_equivariant,
        (
            ("P_t^SL2C(Hom)", "Atiyah-Bott series + C(t,g)"),
            ("Gamma_2-invariant part", "total minus Prym pieces at degrees 6g-6-q, q even in 2..2g-4"),
            ("P_t^eq(X)", "invariant part (x) H(J0) (x) H(BU(1))"),
        ),
    ),
    SpaceId.R_EQ: Route("series", actions.r_equivariant_series, (_AB, ("P_t^eq(R)", "AB series (x) H(J0) (x) H(BU(1))"))),
    SpaceId.X_ORD: Route(
        "poly",
        actions.ordinary_nonfixed,
        (("P_t(PSL even)", "P_t(R0) + Gamma_2-invariant strata"), ("P_t(X)", "invariant part (x) H(J0)")),
    ),
    SpaceId.R_ORD: Route(
        "poly",
        actions.ordinary_nonfixed_bundles,
        (_R0, ("P_t(R)", "P_t(N0(2,0)) (x) H(J0); Gamma_2 trivial on N0(2,0)")),
    ),
    SpaceId.N0_20: Route("poly", formulas.psu_poly, (_R0, ("P_t(N0(2,0))", "Narasimhan-Seshadri: N0(2,0) = R0"))),
    SpaceId.M0_20: Route(
        "poly",
        strata.m0_poincare_via_strata,
        (_R0, ("stratum sum", "sum over d of t^(2mu_d) P_t(Gamma_2 cover of S^(2g-2-2d) M), Macdonald generating function")),
    ),
    SpaceId.PSL_EVEN: Route(
        "poly",
        actions.psl_even_poincare,
        (_R0, ("P_t(M0(2,0)/Gamma_2)", "P_t(R0) + Gamma_2-invariant strata (assumes Gamma_2-equivariant stratification)")),
    ),
    SpaceId.PSL_ODD: Route("flags", None, (("odd component", "Torelli flags only; no Betti numbers available"),)),
    SpaceId.SYM_PROD: Route(
        "poly",
        lambda g, n: strata.sym_product_poincare(n, g),
        (("P_t(S^n M)", "coefficient of x^n in (1+xt)^2g / ((1-x)(1-xt^2))"),),
        needs_n=True,
    ),
    SpaceId.PRYM_COVER: Route(
        "poly",
        lambda g, n: strata.prym_cover_poincare(n, g),
        (
            ("P_t(S^n M)", "coefficient of x^n in (1+xt)^2g / ((1-x)(1-xt^2))"),
            ("Prym part", "(2^2g - 1) binom(2g-2, n) t^n"),
        ),
        needs_n=True,
    ),
}


def compute(space: SpaceId, g: int, n: int | None = None) -> IntPolynomial | RationalFunction:
    route = ROUTES[space]
    if route.compute is None:
        raise ValueError(f"{space.value} has no Betti numbers (flags only)")
    if route.needs_n:
        if n is None or n < 0:
            raise ValueError(f"{space.value} needs --n >= 0")
        return route.compute(g, n)
    return route.compute(g)
