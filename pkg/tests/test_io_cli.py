import json

import pytest

from lieradicals import catalog
from lieradicals.cli import main
from lieradicals.errors import ParseError
from lieradicals.io import algebra_from_dict, algebra_to_dict, dumps_algebra, load_algebra, loads_json
from lieradicals.report import StructureReport, build_report, recheck_report


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


@pytest.mark.parametrize("name", ["heisenberg3", "classII(2)", "gl(2)", "cext4"])
def test_round_trip(name, tmp_path):
    L = catalog.build(name)
    M = load_algebra(write(tmp_path, "a.json", dumps_algebra(L)))
    assert M.table == L.table and M.labels == L.labels and M.name == L.name


def test_complex_scalars_round_trip():
    doc = {"dim": 2, "basis": ["x", "y"], "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1/2-3i"}}]}
    text = algebra_to_dict(algebra_from_dict(doc))["brackets"][0]["coeffs"]["1"]
    assert text == "1/2-3*i"
    again = dict(doc, brackets=[{"i": 0, "j": 1, "coeffs": {"1": text}}])
    assert algebra_from_dict(again).table == algebra_from_dict(doc).table


def test_parse_error_locations():
    base = {"dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": {}}]}
    with pytest.raises(ParseError) as info:
        algebra_from_dict(base)
    assert info.value.location == "brackets[0]"
    dup = {"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {}}, {"i": 0, "j": 1, "coeffs": {}}]}
    with pytest.raises(ParseError, match="twice"):
        algebra_from_dict(dup)
    with pytest.raises(ParseError) as info:
        algebra_from_dict({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "x"}}]})
    assert info.value.location == "brackets[0].coeffs.0"
    with pytest.raises(ParseError) as info:
        loads_json('{"dim": 2,\n  "brackets": [}', "f.json")
    assert info.value.location.startswith("f.json:2:")


def test_report_json_round_trip():
    L = catalog.borel2()
    report = build_report(L)
    again = StructureReport.from_json(report.to_json())
    assert again == report
    assert recheck_report(L, again) == []
    with pytest.raises(ParseError):
        StructureReport.from_dict({"name": "x"})


def test_recheck_detects_tampering():
    L = catalog.heisenberg3()
    doc = build_report(L).to_dict()
    doc["centre_dim"] = 2
    assert recheck_report(L, StructureReport.from_dict(doc))


def test_cli_analyze(capsys):
    assert main(["analyze", "catalog:heisenberg3"]) == 0
    assert "heisenberg3" in capsys.readouterr().out
    assert main(["analyze", "--json", "catalog:t(4)"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["dim"] == 10 and report["notes"]


def test_cli_emit_then_analyze_matches(capsys, tmp_path):
    assert main(["catalog", "emit", "classII", "2"]) == 0
    path = write(tmp_path, "c.json", capsys.readouterr().out)
    assert main(["analyze", "--json", path]) == 0
    from_file = json.loads(capsys.readouterr().out)
    assert main(["analyze", "--json", "catalog:classII(2)"]) == 0
    assert json.loads(capsys.readouterr().out) == from_file


def test_cli_verify(capsys, tmp_path):
    assert main(["verify", "--samples", "5", "catalog:borel2"]) == 0
    assert "invariants hold" in capsys.readouterr().out
    bad = algebra_to_dict(catalog.heisenberg3())
    bad["brackets"].append({"i": 0, "j": 2, "coeffs": {"0": "1"}})
    assert main(["verify", write(tmp_path, "bad.json", bad)]) == 2


def test_cli_op(capsys):
    assert main(["op", "frattini_ideal", "catalog:borel2"]) == 0
    assert json.loads(capsys.readouterr().out)["result"] == {"dim": 0, "rows": []}
    assert main(["op", "simple_components", "catalog:heisenberg3"]) == 2
    assert main(["op", "no_such_op", "catalog:borel2"]) == 1


def test_cli_products(capsys, tmp_path):
    sl2 = write(tmp_path, "sl2.json", dumps_algebra(catalog.sl(2)))
    assert main(["product", "direct", sl2, sl2]) == 0
    prod = write(tmp_path, "p.json", capsys.readouterr().out)
    assert main(["op", "subsimple", prod]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["tag"] == "classI"

    spec = {"acting": algebra_to_dict(catalog.abelian(1)), "ideal": algebra_to_dict(catalog.heisenberg3()),
            "phi": [[["0"] * 3] * 3]}
    assert main(["product", "semidirect", write(tmp_path, "s.json", spec)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dim"] == 4 and len(out["brackets"]) == 1


def test_cli_catalog_and_usage_errors(capsys, tmp_path):
    assert main(["catalog", "list"]) == 0
    assert "heisenberg3" in capsys.readouterr().out
    assert main(["catalog", "emit", "nope"]) == 1
    assert main(["analyze", write(tmp_path, "broken.json", "{")]) == 1
    assert main(["analyze", str(tmp_path / "missing.json")]) == 1
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 1
