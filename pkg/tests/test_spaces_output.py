import json

import pytest

from charvar.algebra import GradedDims, IntPolynomial, RationalFunction
from charvar.output import OutputDocument, render, table1_json, table1_latex
from charvar.actions import paper_table1, torelli_table_odd
from charvar.spaces import ROUTES, SpaceId, compute


def test_parse_is_forgiving():
    assert SpaceId.parse("x0") is SpaceId.X0
    assert SpaceId.parse("X0_irr") is SpaceId.X0_IRR
    assert SpaceId.parse("sym-prod") is SpaceId.SYM_PROD
    with pytest.raises(ValueError):
        SpaceId.parse("Y7")


@pytest.mark.parametrize("space", [s for s in SpaceId if ROUTES[s].kind != "flags"])
def test_every_route_computes(space):
    value = compute(space, 3, 2 if ROUTES[space].needs_n else None)
    expected = IntPolynomial if ROUTES[space].kind == "poly" else RationalFunction
    assert isinstance(value, expected)
    assert ROUTES[space].provenance


def test_compute_errors():
    with pytest.raises(ValueError):
        compute(SpaceId.PSL_ODD, 3)
    with pytest.raises(ValueError):
        compute(SpaceId.SYM_PROD, 3)


def test_document_requires_provenance():
    with pytest.raises(ValueError):
        OutputDocument("X0", 2, "exact", GradedDims((1,), 0, True), [])


def test_big_betti_numbers_are_strings():
    big = 2**80 + 1
    doc = OutputDocument("X0", 2, "exact", GradedDims((1, big), 1, True), [("a", "b")])
    data = json.loads(render(doc, "json"))
    assert data["betti"] == ["1", str(big)]
    assert list(data) == ["space", "genus", "truncation", "betti", "provenance"]
    assert f"1,{big}" in render(doc, "csv")
    assert f"${big}$" in render(doc, "latex")


def test_decomposition_rendering():
    doc = OutputDocument("PSLodd", 2, "exact", None, [("a", "b")], decomposition=torelli_table_odd(2))
    data = json.loads(render(doc, "json"))
    assert data["betti"] == []
    assert data["decomposition"][5] == {
        "degree": 5, "total": None, "invariant": None, "prym": "30",
        "torelli_trivial": False, "prym_torelli_trivial": True,
    }
    csv_lines = render(doc, "csv").splitlines()
    assert "5,,,30,False,True" in csv_lines
    assert "-- & -- & $30$ & no & yes" in render(doc, "latex")


def test_table1_renderers():
    rows = paper_table1()
    data = json.loads(table1_json(rows))
    assert len(data["rows"]) == 12
    assert {r["torelli_trivial"] for r in data["rows"]} == {"yes", "no"}
    tex = table1_latex(rows)
    assert tex.count(" & yes & ") + tex.count(" & no & ") == 12
    assert tex.startswith(r"\begin{tabular}")
