"""Cross-checks between independently computed quantities, one genus at a time."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import actions, formulas, strata
from .algebra import IntPolynomial, series_expand


@dataclass(frozen=True)
class CheckResult:
    genus: int
    check: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def first_mismatch(a: IntPolynomial, b: IntPolynomial) -> int | None:
    n = max(len(a.coeffs), len(b.coeffs))
    for k in range(n):
        if a[k] != b[k]:
            return k
    return None


def _mismatch(label: str, a: IntPolynomial, b: IntPolynomial) -> str:
    k = first_mismatch(a, b)
    if k is None:
        return ""
    return f"{label}: first mismatch at t^{k} ({a[k]} != {b[k]})"


def check_oracle_identity(g: int) -> str:
    closed = formulas.c_poly_closed(g)
    summed = strata.c_poly_strata(g)
    return _mismatch("C(t,g) closed form vs stratum sum", closed, summed)


def check_certified_nonnegative(g: int) -> str:
    for name, fn in [
        ("C(t,g)", formulas.c_poly_closed),
        ("P_t(R0)", formulas.psu_poly),
        ("P_t(R0^irr)", formulas.psu_irr_poly),
        ("P_t(X0)", formulas.x0_poly),
    ]:
        p = fn(g)
        if any(c < 0 for c in p.coeffs):
            return f"{name} has a negative coefficient"
    return ""


def check_degree_laws(g: int) -> str:
    top = 6 * g - 6
    c = formulas.c_poly_closed(g)
    problems = []
    if c.degree != top:
        problems.append(f"deg C = {c.degree}, expected {top}")
    if c.leading != 4**g + g - 2:
        problems.append(f"leading C = {c.leading}, expected {4**g + g - 2}")
    for name, p in [("P_t(R0)", formulas.psu_poly(g)), ("P_t(X0)", formulas.x0_poly(g))]:
        if p.degree != top:
            problems.append(f"deg {name} = {p.degree}, expected {top}")
    if c[0] != 0 or formulas.psu_poly(g)[0] != 1:
        problems.append("constant terms wrong")
    return "; ".join(problems)


def check_additivity(g: int) -> str:
    psu, c, x0 = formulas.psu_poly(g), formulas.c_poly_closed(g), formulas.x0_poly(g)
    problems = [
        _mismatch("X0 = R0 + C", x0, psu + c),
        _mismatch("X0irr = R0irr + C", formulas.x0_irr_poly(g), formulas.psu_irr_poly(g) + c),
        _mismatch("M0 via strata = X0", strata.m0_poincare_via_strata(g), x0),
    ]
    if x0(-1) != psu(-1) + c(-1):
        problems.append("Euler characteristic not additive")
    return "; ".join(p for p in problems if p)


def check_symmetric_products(g: int) -> str:
    for n in range(2 * g - 1):
        sym = strata.sym_product_poincare(n, g)
        cover = strata.prym_cover_poincare(n, g)
        if not sym.is_palindromic(2 * n):
            return f"S^{n}M not palindromic"
        if not cover.is_palindromic(2 * n):
            return f"cover of S^{n}M not palindromic"
        # (1-x)^2g / (1-x)^2 = (1-x)^(2g-2)
        if sym(-1) != (-1) ** n * formulas.binom(2 * g - 2, n):
            return f"chi(S^{n}M) wrong"
    return ""


def check_tables(g: int) -> str:
    rows = actions.torelli_table_equivariant_even(g)
    splitting = {6 * g - 6 - q for q in actions.even_index_set(g)}
    for row in rows:
        if row.total != row.invariant + row.prym or row.invariant < 0:
            return f"row {row.degree} inconsistent"
        if row.prym and row.degree not in splitting:
            return f"prym mass outside splitting degrees at {row.degree}"
    defect = actions.kirwan_defect(g)
    if defect.is_zero() != (g == 2):
        return "Kirwan defect vanishing does not match g == 2"
    if defect != actions.prym_column(g, actions.even_index_set(g)).shift(1):
        return "Kirwan defect is not the shifted Prym column"
    odd = actions.torelli_table_odd(g)
    if odd[6 * g - 6].prym != 0:
        return "odd table has Prym mass in the top degree"
    return ""


def check_series_positivity(g: int, order: int | None = None) -> str:
    order = 4 * g if order is None else order
    for name, f in [
        ("SL2C-equivariant series", formulas.sl2c_equivariant_series(g)),
        ("non-fixed equivariant series", actions.tensor_nonfixed_equivariant(g)),
    ]:
        dims = series_expand(f, order)
        if not dims.is_nonnegative():
            k = next(i for i, d in enumerate(dims.dims) if d < 0)
            return f"{name} negative at t^{k}"
    return ""


def check_psl_even(g: int) -> str:
    x0, psl = formulas.x0_poly(g), actions.psl_even_poincare(g)
    diff = x0 - psl
    if any(c < 0 for c in diff.coeffs):
        return "PSL even part exceeds X0"
    support = {k for k, c in enumerate(diff.coeffs) if c}
    expected = {s.shift + s.n for s in strata.strata(g)}
    if support != expected:
        return f"Prym support {sorted(support)} != stratum middle degrees {sorted(expected)}"
    return ""


CHECKS = [
    ("oracle_identity", check_oracle_identity),
    ("certified_nonnegative", check_certified_nonnegative),
    ("degree_laws", check_degree_laws),
    ("additivity", check_additivity),
    ("symmetric_products", check_symmetric_products),
    ("tables", check_tables),
    ("series_positivity", check_series_positivity),
    ("psl_even", check_psl_even),
]


def check_genus(g: int, fault: str | None = None) -> list[CheckResult]:
    results = []
    with formulas.formula_fault(fault):
        for name, fn in CHECKS:
            try:
                detail = fn(g)
            except ArithmeticError as exc:
                term = getattr(exc, "term", None)
                where = f" at {term}" if term else ""
                detail = f"{type(exc).__name__}{where}: {exc}"
            results.append(CheckResult(g, name, not detail, detail))
    return results


def _worker(args: tuple[int, str | None]) -> list[CheckResult]:
    return check_genus(*args)


def run_verify(genus_max: int, jobs: int = 1, fault: str | None = None) -> list[CheckResult]:
    if genus_max < 2:
        raise ValueError("genus_max must be >= 2")
    work = [(g, fault) for g in range(2, genus_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_genus = list(pool.map(_worker, work))
    else:
        per_genus = [_worker(w) for w in work]
    return [r for rs in sorted(per_genus, key=lambda rs: rs[0].genus) for r in rs]
