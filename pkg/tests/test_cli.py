import json

import pytest

from paths import DATA, GROUPOID_SAMPLES, SAMPLES
from vecgroupoid.cli import main
from vecgroupoid.documents import parse_spec


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("path", GROUPOID_SAMPLES, ids=lambda p: p.name)
def test_samples_pass(capsys, path):
    code, out, _ = run(capsys, "check", path)
    assert code == 0
    assert json.loads(out)["summary"]["fail_count"] == 0


def test_pair_report_lists_laws(capsys):
    code, out, _ = run(capsys, "check", SAMPLES / "pair.json")
    ids = [r["law_id"] for r in json.loads(out)["results"]]
    for law in ["G1", "G2", "G3", "3.1.3.1", "3.1.4.1", "3.1.4.4", "P2.1.i", "P2.1.v",
                "P2.2.alpha-inv", "ker-alpha-subspace", "anchor:M.mult", "P2.1.viii"]:
        assert law in ids


def test_mutated_table(capsys):
    code, out, _ = run(capsys, "check", DATA / "pair_table_mutated.json")
    assert code == 1
    failures = [r for r in json.loads(out)["results"] if r["status"] == "fail"]
    assert any(len(r["witness"]) == 3 for r in failures)


@pytest.mark.parametrize("name", ["truncated.json", "pair_table_missing.json", "pair_p6.json",
                                  "does_not_exist.json"])
def test_input_errors(capsys, name):
    code, out, err = run(capsys, "check", DATA / name)
    assert code == 2
    assert out == ""
    assert err.startswith("vg: error:")


def test_unknown_suite(capsys):
    assert run(capsys, "check", SAMPLES / "pair.json", "--suites", "vector,nope")[0] == 2


def test_bad_usage(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_suite_selection(capsys):
    code, out, _ = run(capsys, "check", SAMPLES / "pair.json", "--suites", "ehresmann")
    assert code == 0
    assert [r["law_id"] for r in json.loads(out)["results"]][-1] == "G3"


def test_cap_override(capsys, monkeypatch):
    monkeypatch.setenv("VG_CAP", "2")
    assert run(capsys, "check", SAMPLES / "pair.json")[0] == 2


def test_reports_byte_identical(capsys, tmp_path):
    for name in ("a", "b"):
        assert main(["check", str(DATA / "pair_table_mutated.json"), "--report",
                     str(tmp_path / name)]) == 1
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()
    assert capsys.readouterr().out == ""


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "check", SAMPLES / "null.json", "--timing")
    assert isinstance(json.loads(out)["summary"]["elapsed_ms"], float)


@pytest.mark.parametrize("kind,args", [
    ("null", ["--p", "3", "--dim", "2"]),
    ("single-unit", ["--p", "5", "--dim", "1"]),
    ("pair", ["--p", "2", "--dim", "2", "--table"]),
])
def test_construct(capsys, tmp_path, kind, args):
    out = tmp_path / "g.json"
    assert run(capsys, "construct", kind, *args, "-o", out)[0] == 0
    assert run(capsys, "check", out)[0] == 0


def test_construct_induced(capsys, tmp_path):
    out = tmp_path / "ig.json"
    code, _, _ = run(capsys, "construct", "induced", "--dim", "2", "--parent",
                     SAMPLES / "pair.json", "--h", "[[1, 1]]", "-o", out)
    assert code == 0
    g = parse_spec(out.read_text())
    assert g.V0.dim == 2 and g.kind == "induced"
    code, report, _ = run(capsys, "check", out)
    assert code == 0
    assert "canonical:M.mult" in report


def test_construct_induced_needs_parent(capsys):
    assert run(capsys, "construct", "induced", "--dim", "1")[0] == 2


def test_construct_with_report(capsys, tmp_path):
    rep = tmp_path / "r.json"
    code, _, _ = run(capsys, "construct", "pair", "--p", "3", "-o", tmp_path / "g.json",
                     "--report", rep)
    assert code == 0 and json.loads(rep.read_text())["summary"]["fail_count"] == 0


def test_morphism_check(capsys):
    assert run(capsys, "morphism-check", SAMPLES / "anchor_morphism.json")[0] == 0
    code, out, _ = run(capsys, "morphism-check", DATA / "not_morphism.json")
    assert code == 1
    code, out, _ = run(capsys, "morphism-check", SAMPLES / "anchor_morphism.json",
                       "--suites", "morphism,groupoids")
    assert code == 0 and "source:G1" in out and "target:G1" in out


def test_factorize(capsys, tmp_path):
    out = tmp_path / "v.json"
    code, report, _ = run(capsys, "factorize", SAMPLES / "factorize_units.json", "-o", out)
    assert code == 0
    assert "UP.unique" in report
    assert json.loads(out.read_text())["f"] == [[1], [1]]


def test_factorize_rejects_non_morphism(capsys):
    code, out, _ = run(capsys, "factorize", DATA / "factorize_not_morphism.json")
    assert code == 1
    results = json.loads(out)["results"]
    assert all(r["law_id"].startswith("given:") for r in results)
    assert any(r["status"] == "fail" and r["witness"] for r in results)
