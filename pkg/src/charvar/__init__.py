"""Exact Betti numbers of SL(2,C) character varieties and Higgs moduli of surfaces."""
from .algebra import (
    GradedDims,
    IntegralityViolation,
    IntPolynomial,
    NotASeries,
    NotDivisible,
    RationalFunction,
    poly_add,
    poly_divexact,
    poly_mul,
    poly_pow,
    rat_equal,
    series_expand,
)
from .formulas import (
    GenusParams,
    ab_equivariant_series,
    c_poly_closed,
    psu_irr_poly,
    psu_poly,
    sl2c_equivariant_series,
    x0_irr_poly,
    x0_poly,
)
from .strata import c_poly_strata, m0_poincare_via_strata, prym_cover_poincare, sym_product_poincare

__version__ = "0.1.0"
