import json
import os

import pytest

from cycbmw.cli import main

GENERIC = ["--field", "gfp:101", "--q", "2", "--u", "4", "--admissible"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_report_and_dump(tmp_path, capsys):
    dump = tmp_path / "b12.json"
    code, out, err = run(capsys, "build", "--n", "2", *GENERIC, "--out", str(dump))
    assert code == 0
    report = json.loads(out)
    assert report["dimension"] == 3
    assert report["expected_dimension"] == 3
    assert report["relation13_orientation"] == "x1"
    blob = json.loads(dump.read_text())
    assert blob["basis"] == ["1", "e1", "g1"]


def test_build_malformed_u(capsys):
    code, out, err = run(capsys, "build", "--n", "2", "--field", "gfp:101",
                         "--q", "2", "--u", ",,")
    assert code == 1 and "u" in err


def test_build_param_file_exclusive(tmp_path, capsys):
    f = tmp_path / "p.params"
    f.write_text("field = gfp:101\nq = 2\nrho = 76\nu = 4\nadmissible = true\n")
    code, out, err = run(capsys, "build", "--n", "2", "--params", str(f),
                         "--q", "2")
    assert code == 1 and "mutually exclusive" in err
    code, out, err = run(capsys, "build", "--n", "2", "--params", str(f))
    assert code == 0 and json.loads(out)["dimension"] == 3


def test_build_cap_exhaustion_is_resource_error(capsys):
    code, out, err = run(capsys, "build", "--n", "2", *GENERIC,
                         "--degree-cap", "1")
    assert code == 2 and "cap" in err


def test_classify_affine_rows(capsys):
    code, out, err = run(capsys, "classify", "--mode", "affine",
                         "--n", "2", "--e", "2")
    assert code == 0
    assert len(json.loads(out)) == 5
    code, out, err = run(capsys, "classify", "--mode", "affine",
                         "--n", "2", "--e", "2", "--omega-zero")
    assert len(json.loads(out)) == 4


def test_classify_cyclotomic_scope_rejection(capsys):
    # u = 2 = q is not a power of q^2 when q generates the full group
    code, out, err = run(capsys, "classify", "--mode", "cyclotomic", "--n", "2",
                         "--field", "gfp:101", "--q", "2", "--u", "2",
                         "--rho", "51", "--no-admissible")
    assert code == 1 and "power of q^2" in err


def test_classify_explicit_multicharge(capsys):
    code, out, err = run(capsys, "classify", "--mode", "cyclotomic", "--n", "3",
                         *GENERIC, "--multicharge", "1")
    assert code == 0 and len(json.loads(out)) == 4
    # inconsistent charges are rejected, not silently accepted
    code, out, err = run(capsys, "classify", "--mode", "cyclotomic", "--n", "3",
                         *GENERIC, "--multicharge", "7")
    assert code == 1


def test_classify_csv_quoting(capsys):
    code, out, err = run(capsys, "classify", "--mode", "cyclotomic", "--n", "3",
                         *GENERIC, "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "f,lambda,kleshchev"
    assert '"1,1,1"' in out      # comma-bearing field is quoted per RFC 4180


def test_byte_identical_outputs(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run(capsys, "classify", "--mode", "affine", "--n", "4",
                         "--e", "3", "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    da, db = tmp_path / "da.json", tmp_path / "db.json"
    for path in (da, db):
        code, _, _ = run(capsys, "build", "--n", "2", *GENERIC, "--out", str(path))
        assert code == 0
    assert da.read_bytes() == db.read_bytes()


def test_analyze_roundtrip(tmp_path, capsys):
    dump = tmp_path / "b13.json"
    code, _, _ = run(capsys, "build", "--n", "3", *GENERIC, "--out", str(dump))
    assert code == 0
    code, out, err = run(capsys, "analyze", str(dump), "--strict")
    assert code == 0
    payload = json.loads(out)
    assert payload["blocks"] == [3, 2, 1, 1]
    assert payload["split"] is True
    assert payload["classification_count"] == 4
    assert payload["match"] is True


def test_analyze_ariki_koike_dump(tmp_path, capsys):
    # q = 10: q^2 = -1 has order 2; one Kleshchev partition of 2 at level 1
    dump = tmp_path / "ak.json"
    code, _, _ = run(capsys, "build", "--n", "2", "--field", "gfp:101",
                     "--q", "10", "--u", "100", "--admissible",
                     "--variant", "ariki_koike", "--out", str(dump))
    assert code == 0
    code, out, err = run(capsys, "analyze", str(dump))
    assert code == 0
    payload = json.loads(out)
    assert payload["classification_count"] == 1
    assert payload["match"] is True
    assert len(payload["blocks"]) == 1


def test_analyze_corrupted_dump(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"field\": \"gfp:101\"}")
    code, out, err = run(capsys, "analyze", str(bad))
    assert code == 1
    notjson = tmp_path / "notjson.json"
    notjson.write_text("hello")
    code, out, err = run(capsys, "analyze", str(notjson))
    assert code == 1


def test_semiadmissible_command(capsys):
    code, out, err = run(capsys, "semiadmissible", *GENERIC)
    assert code == 0 and out.strip() == "1"


def test_verify_only_filter(capsys):
    code, out, err = run(capsys, "verify", "--only", "combinatorics")
    assert code == 0
    assert "PASS combinatorics" in out
    code, out, err = run(capsys, "verify", "--only", "nonsense")
    assert code == 1 and "unknown criteria" in err


def test_unknown_flag_is_validation_error(capsys):
    code, out, err = run(capsys, "build", "--frobnicate")
    assert code == 1
