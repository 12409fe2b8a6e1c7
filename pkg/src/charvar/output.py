"""Serialization of Betti tables to JSON, CSV and LaTeX.

Betti numbers are written as decimal strings so that values past 2^63 survive
any downstream JSON parser.  Output is byte-deterministic: no timestamps and
fixed key order.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .actions import Table1Row, TorelliRow
from .algebra import GradedDims

DECOMP_FIELDS = ("degree", "total", "invariant", "prym", "torelli_trivial", "prym_torelli_trivial")


@dataclass
class OutputDocument:
    space: str
    genus: int
    truncation: int | str
    betti: GradedDims | None
    provenance: list[tuple[str, str]]
    decomposition: list[TorelliRow] | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.provenance:
            raise ValueError("every document needs provenance")

    def to_dict(self) -> dict:
        doc: dict = {
            "space": self.space,
            "genus": self.genus,
            "truncation": self.truncation,
            "betti": [str(d) for d in self.betti.dims] if self.betti is not None else [],
        }
        if self.decomposition is not None:
            doc["decomposition"] = [_row_dict(r) for r in self.decomposition]
        doc["provenance"] = [list(p) for p in self.provenance]
        return doc


def _row_dict(row: TorelliRow) -> dict:
    return {
        "degree": row.degree,
        "total": None if row.total is None else str(row.total),
        "invariant": None if row.invariant is None else str(row.invariant),
        "prym": str(row.prym),
        "torelli_trivial": row.torelli_trivial,
        "prym_torelli_trivial": row.prym_torelli_trivial,
    }


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def to_json(doc: OutputDocument) -> str:
    return dumps_json(doc.to_dict())


def to_csv(doc: OutputDocument) -> str:
    buf = io.StringIO()
    buf.write(f"# space={doc.space} genus={doc.genus} truncation={doc.truncation}\n")
    for quantity, route in doc.provenance:
        buf.write(f"# {quantity}: {route}\n")
    w = csv.writer(buf, lineterminator="\n")
    if doc.decomposition is not None:
        w.writerow(DECOMP_FIELDS)
        for row in doc.decomposition:
            d = _row_dict(row)
            w.writerow(["" if d[k] is None else d[k] for k in DECOMP_FIELDS])
    else:
        w.writerow(("degree", "betti"))
        for k, b in enumerate(doc.betti.dims):
            w.writerow((k, b))
    return buf.getvalue()


def _tex_int(x) -> str:
    return "--" if x is None else f"${x}$"


def to_latex(doc: OutputDocument) -> str:
    lines = [f"% space={doc.space} genus={doc.genus} truncation={doc.truncation}"]
    for quantity, route in doc.provenance:
        lines.append(f"% {quantity}: {route}")
    if doc.decomposition is not None:
        lines += [r"\begin{tabular}{|c|c|c|c|c|c|}", r"\hline",
                  r"degree & total & $\Gamma_2$-invariant & Prym & $\mathcal I(M)$ trivial & $\mathcal{PI}(M)$ trivial \\",
                  r"\hline"]
        for r in doc.decomposition:
            yn = lambda b: "yes" if b else "no"  # noqa: E731
            lines.append(
                f"${r.degree}$ & {_tex_int(r.total)} & {_tex_int(r.invariant)} & ${r.prym}$ & "
                f"{yn(r.torelli_trivial)} & {yn(r.prym_torelli_trivial)} \\\\"
            )
    else:
        lines += [r"\begin{tabular}{|c|c|}", r"\hline", r"degree & $b_k$ \\", r"\hline"]
        for k, b in enumerate(doc.betti.dims):
            lines.append(f"${k}$ & ${b}$ \\\\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def render(doc: OutputDocument, fmt: str) -> str:
    return {"json": to_json, "csv": to_csv, "latex": to_latex}[fmt](doc)


TABLE1_CAPTION = "Action of the Torelli group on cohomology of representation varieties (g>3)"


def table1_json(rows: list[Table1Row]) -> str:
    return dumps_json({
        "caption": TABLE1_CAPTION,
        "rows": [{"group": r.label, "torelli_trivial": "yes" if r.trivial else "no", "reference": r.reference}
                 for r in rows],
    })


def table1_latex(rows: list[Table1Row]) -> str:
    lines = [r"\begin{tabular}{|| c | c | c ||}", r"\hline\hline",
             r"Cohomology group & ${\mathcal I}(M)$ acts trivially? & Reference \\", r"\hline\hline"]
    for i, r in enumerate(rows):
        lines.append(f"{r.latex} & {'yes' if r.trivial else 'no'} & {r.reference} \\\\")
        lines.append(r"\hline\hline" if i % 2 else r"\hline")
    lines.append(r"\end{tabular}")
    lines.append(f"% {TABLE1_CAPTION}")
    return "\n".join(lines) + "\n"
