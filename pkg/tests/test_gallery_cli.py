import json
import subprocess
import sys

import pytest

from latsep import gallery as gal
from latsep.cli import main
from latsep.finite import FinDLat
from latsep.matrix import ROWS, Ctx, evaluate_row, verify_matrix
from latsep.runner import RunError, available_checks, run_checks


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gallery_shape():
    entries = gal.gallery()
    spaces = [e for e in entries if not e.is_finite]
    finite = [e for e in entries if e.is_finite]
    assert len(spaces) >= 5 and len(finite) >= 5
    assert {"fig1", "fig2", "fig3", "fig4", "cofinite_N"} <= {e.id for e in spaces}
    for e in entries:
        assert e.expected
        assert all(exp.anchor for exp in e.expected.values())
        assert set(e.expected) <= set(available_checks(e.lattice if e.is_finite else e.space))
    with pytest.raises(KeyError):
        gal.get("nope")


def test_named_expectations():
    assert gal.get("fig3").expected["boolean_BL"].holds
    cof = gal.get("cofinite_N").expected
    assert cof["subfit_L"].holds and not cof["sigma_subfit"].holds


@pytest.mark.parametrize("entry", [e.id for e in gal.gallery()])
def test_expectations_reproduced(entry):
    e = gal.get(entry)
    subject = e.lattice if e.is_finite else e.space
    result = run_checks(subject, list(e.expected), 2, e)
    assert result.mismatches() == []


def test_cli_list_and_describe(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0 and out.splitlines()[0].startswith("fig1\tspace\t")
    code, out, _ = run_cli(capsys, "describe", "fig4")
    data = json.loads(out)
    assert code == 0 and data["kind"] == "space" and data["expected"]["regular_L"]["holds"] is False
    assert run_cli(capsys, "describe", "zzz")[0] == 3


def test_cli_run_fig1(capsys):
    code, out, _ = run_cli(capsys, "run", "fig1", "--checks", "subfit_L,subfit_BL", "--bound", "2")
    rows = {r["check"]: r for r in json.loads(out)["results"]}
    assert rows["subfit_L"]["verdict"] == "false" and rows["subfit_L"]["witness"] == "y"
    assert rows["subfit_BL"]["verdict"] == "verified-at-bound(2)"
    assert code == 1


def test_cli_run_fig4(capsys):
    code, out, _ = run_cli(capsys, "run", "fig4", "--checks", "regular_L,regular_BL")
    rows = [r["verdict"] for r in json.loads(out)["results"]]
    assert rows == ["false", "verified-at-bound(2)"] and code == 1


def test_cli_run_file(tmp_path, capsys):
    f = tmp_path / "chain.json"
    f.write_text(json.dumps(FinDLat.chain(3).to_json()))
    code, out, _ = run_cli(capsys, "run", "--file", str(f), "--checks", "all")
    rows = {r["check"]: r["verdict"] for r in json.loads(out)["results"]}
    assert rows["vsubfit"] == "false" and rows["boolean"] == "false" and code == 1
    g = tmp_path / "space.json"
    g.write_text(json.dumps(gal.fig2().to_json()))
    code, out, _ = run_cli(capsys, "run", "--file", str(g), "--checks", "subfit_L")
    assert code == 0 and json.loads(out)["results"][0]["verdict"] == "true"


def test_cli_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"named": ["a"], "named_leq": [], "fans": [{"id": "f", "limit": "q"}]}))
    assert run_cli(capsys, "run", "--file", str(bad))[0] == 3
    m3 = tmp_path / "m3.json"
    m3.write_text(json.dumps({"elements": ["0", "a", "b", "c", "1"],
                              "leq": [["0", x] for x in "abc"] + [[x, "1"] for x in "abc"]}))
    assert run_cli(capsys, "run", "--file", str(m3))[0] == 3
    assert run_cli(capsys, "run", "fig1", "--checks", "bogus")[0] == 3
    assert run_cli(capsys, "run")[0] == 3
    assert run_cli(capsys, "run", "--file", str(tmp_path / "missing.json"))[0] == 3


def test_exit_codes(capsys):
    assert run_cli(capsys, "run", "bool2")[0] == 0
    assert run_cli(capsys, "run", "fig2", "--checks", "subfit_L")[0] == 0
    assert run_cli(capsys, "run", "fig2", "--checks", "subfit_L,I_subfit")[0] == 1


def test_mismatch_and_unknown_precedence():
    e = gal.get("fig1")
    flipped = gal.GalleryEntry(e.id, e.summary, space=e.space,
                               expected={"subfit_L": gal.Expectation(True, "deliberately wrong")})
    assert run_checks(e.space, ["subfit_L"], 2, flipped).exit_code() == 4
    # an expected check with no decision counts as a mismatch
    res = run_checks(e.space, ["subfit_L"], 2, e)
    res.reports[0] = res.reports[0].__class__(**{**res.reports[0].__dict__, "verdict": res.reports[0].verdict.UNKNOWN})
    assert res.exit_code() == 4
    res.expected = {}
    assert res.exit_code() == 2


def test_bound_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("LATSEP_BOUND", "1")
    code, out, _ = run_cli(capsys, "run", "fig1", "--checks", "subfit_BL")
    assert json.loads(out)["results"][0]["verdict"] == "verified-at-bound(1)"
    monkeypatch.setenv("LATSEP_BOUND", "two")
    assert run_cli(capsys, "run", "fig1", "--checks", "subfit_BL")[0] == 3
    with pytest.raises(RunError):
        run_checks(gal.fig1(), ["subfit_BL"])


def test_formats(capsys):
    code, md, _ = run_cli(capsys, "run", "fig1", "--checks", "subfit_L", "--format", "md")
    assert md.startswith("# fig1\n") and "| subfit_L | false | false | y |" in md
    code, dot, _ = run_cli(capsys, "run", "fig1", "--format", "dot")
    assert dot.startswith("digraph space {") and '"xinf" -> "y";' in dot
    assert '"x_3";' in dot and '"x_4";' not in dot and "limit" in dot
    code, dot, _ = run_cli(capsys, "run", "chain3", "--format", "dot")
    assert '"0" -> "c1";' in dot and '"0" -> "1";' not in dot


def test_output_is_byte_stable():
    cmd = [sys.executable, "-m", "latsep.cli", "run", "fig2", "--checks", "all", "--bound", "1"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == b.returncode == 1
    assert a.stdout == b.stdout and a.stdout


def test_matrix_spot_checks():
    rows = {f"{r.table}:{r.name}": r for r in ROWS}
    assert evaluate_row(FinDLat.boolean(2), rows["boolean:Boolean"]) == (True, True, True)
    chain = FinDLat.chain(3)
    ctx = Ctx(chain)
    # wsubfit of the lattice is the BL-Boolean row: max X dense
    assert evaluate_row(chain, rows["boolean:BL-Boolean"], ctx) == (False, False, False)
    assert not ctx.holds("wsubfit")


def test_verify_matrix(capsys):
    report = verify_matrix(6)
    assert report.ok and report.lattices == 1 + 1 + 2 + 3 + 5
    with pytest.raises(ValueError):
        verify_matrix(9)
    code, out, _ = run_cli(capsys, "verify-matrix", "--max-size", "5")
    assert code == 0 and json.loads(out)["disagreements"] == []
