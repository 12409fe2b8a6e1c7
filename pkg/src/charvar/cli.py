"""``charvar`` command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
formula inconsistency (a closed form failed to certify).
"""
from __future__ import annotations

import argparse
import sys

from . import actions, formulas, output
from .algebra import GradedDims, IntPolynomial, series_expand
from .spaces import ROUTES, SpaceId, compute
from .verify import run_verify

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_FORMULA = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _check_genus(g: int, cap: int) -> int:
    if g < 2:
        raise UsageError(f"genus must be >= 2 (closed surface of genus g >= 2), got {g}")
    if g > cap:
        raise UsageError(f"genus {g} exceeds the configured cap {cap} (use --genus-cap)")
    return g


def cmd_betti(args) -> output.OutputDocument:
    g = _check_genus(args.genus, args.genus_cap)
    try:
        space = SpaceId.parse(args.space)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    route = ROUTES[space]
    if route.kind == "flags":
        raise UsageError(f"{space.value} carries Torelli flags only; use `charvar torelli-table --odd`")
    if route.needs_n and args.n is None:
        raise UsageError(f"--space {space.value} requires --n")
    if args.truncate is not None and args.truncate < 0:
        raise UsageError("--truncate must be >= 0")
    if route.kind == "series" and args.truncate is None:
        raise UsageError(f"{space.value} is an infinite series; pass --truncate N")
    try:
        value = compute(space, g, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if isinstance(value, IntPolynomial):
        betti = GradedDims.from_polynomial(value, args.truncate)
        truncation = "exact" if args.truncate is None else args.truncate
    else:
        betti = series_expand(value, args.truncate)
        truncation = args.truncate
    label = space.value if not route.needs_n else f"{space.value}({args.n})"
    return output.OutputDocument(label, g, truncation, betti, list(route.provenance))


def cmd_torelli_table(args) -> output.OutputDocument:
    g = _check_genus(args.genus, args.genus_cap)
    if args.odd:
        rows = actions.torelli_table_odd(g)
        return output.OutputDocument(
            SpaceId.PSL_ODD.value, g, "exact", None,
            [("Prym column", "(2^2g - 1) binom(2g-2, q) at degree 6g-6-q, q odd in 1..2g-3"),
             ("totals", "not available for the odd-degree moduli space")],
            decomposition=rows,
        )
    n = args.truncate if args.truncate is not None else actions.default_table_truncation(g)
    rows = actions.torelli_table_equivariant_even(g, n)
    betti = GradedDims(tuple(r.total for r in rows), n)
    prov = list(ROUTES[SpaceId.X0_EQ].provenance)
    prov.append(("Prym column", "(2^2g - 1) binom(2g-2, q) at degree 6g-6-q, q even in 2..2g-4"))
    return output.OutputDocument(SpaceId.X0_EQ.value, g, n, betti, prov, decomposition=rows)


def _write(text: str) -> None:
    sys.stdout.buffer.write(text.encode("utf-8"))
    sys.stdout.flush()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charvar",
        description="Betti numbers of SL(2,C) character varieties and Higgs moduli of a genus-g surface.",
    )
    parser.add_argument("--genus-cap", type=int, default=formulas.DEFAULT_GENUS_CAP, help=argparse.SUPPRESS)
    parser.add_argument("--inject-fault", choices=formulas.FAULTS, default=None, help=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("betti", help="Betti numbers of one space")
    b.add_argument("--space", required=True, help=", ".join(m.value for m in SpaceId))
    b.add_argument("--genus", type=int, required=True)
    b.add_argument("--n", type=int, default=None, help="symmetric product size for SymProd / PrymCover")
    b.add_argument("--truncate", type=int, default=None)
    b.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    v = sub.add_parser("verify", help="run the cross-validation suite")
    v.add_argument("--genus-max", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)

    t = sub.add_parser("torelli-table", help="Torelli/Gamma_2 decomposition table")
    t.add_argument("--genus", type=int, required=True)
    t.add_argument("--odd", action="store_true")
    t.add_argument("--truncate", type=int, default=None)
    t.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    t1 = sub.add_parser("table1", help="Torelli triviality table")
    t1.add_argument("--format", choices=("json", "latex"), default="json")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with formulas.formula_fault(args.inject_fault):
            if args.command == "betti":
                _write(output.render(cmd_betti(args), args.format))
            elif args.command == "torelli-table":
                _write(output.render(cmd_torelli_table(args), args.format))
            elif args.command == "table1":
                rows = actions.paper_table1()
                _write(output.table1_json(rows) if args.format == "json" else output.table1_latex(rows))
            elif args.command == "verify":
                if args.genus_max < 2:
                    raise UsageError(f"--genus-max must be >= 2, got {args.genus_max}")
                _check_genus(args.genus_max, args.genus_cap)
                results = run_verify(args.genus_max, max(args.jobs, 1), args.inject_fault)
                failures = [r.as_dict() for r in results if not r.ok]
                _write(output.dumps_json({
                    "genus_max": args.genus_max,
                    "passed": sum(r.ok for r in results),
                    "failed": len(failures),
                    "failures": failures,
                    "results": [r.as_dict() for r in results],
                }))
                if failures:
                    first = failures[0]
                    print(f"verify: FAIL g={first['genus']} {first['check']}: {first['detail']}", file=sys.stderr)
                    return EXIT_VERIFY
    except UsageError as exc:
        print(f"charvar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        term = getattr(exc, "term", None)
        where = f" in {term}" if term else ""
        print(f"charvar: formula inconsistency: {type(exc).__name__}{where}: {exc}", file=sys.stderr)
        return EXIT_FORMULA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
