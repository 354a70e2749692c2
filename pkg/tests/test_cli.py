import hashlib
import json

import pytest

from oseq import cli, verify


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_nos_roundtrip(tmp_path, capsys):
    out = tmp_path / "s.txt"
    code, _, _ = run(capsys, "generate", "--kind", "nos", "--k", "3", "--n", "6", "--out", str(out))
    assert code == 0
    text = out.read_text()
    assert text.endswith("\n") and "\n" not in text[:-1]
    man = json.loads((tmp_path / "s.txt.manifest.json").read_text())
    assert man == {
        "kind": "nos", "k": 3, "order": 6, "period": 318,
        "sha256": hashlib.sha256(text[:-1].encode()).hexdigest(),
    }
    code, o, _ = run(capsys, "verify", str(out), "--k", "3", "--n", "6", "--mode", "nos")
    assert code == 0 and o.startswith("ok:")


def test_generate_os_json(tmp_path, capsys):
    code, o1, _ = run(capsys, "generate", "--kind", "os", "--k", "3", "--n", "5", "--format", "json")
    assert code == 0
    doc = json.loads(o1)
    assert doc["manifest"]["order"] == 6 and doc["manifest"]["period"] == 303
    assert len(doc["sequence"]) == 303
    # byte-identical on rerun
    _, o2, _ = run(capsys, "generate", "--kind", "os", "--k", "3", "--n", "5", "--format", "json")
    assert o1 == o2
    path = tmp_path / "s.json"
    path.write_text(o1)
    code, o, _ = run(capsys, "verify", str(path), "--mode", "os", "--format", "json")
    rep = json.loads(o)
    assert code == 0 and rep["ok"] and rep["order"] == 6 and rep["period"] == 303


def test_generate_stdout_splits_manifest(capsys):
    code, out, err = run(capsys, "generate", "--kind", "nos", "--k", "4", "--n", "4")
    assert code == 0
    assert len(out.strip()) == 101
    assert json.loads(err)["period"] == 101


def test_generate_large_alphabet_uses_commas(tmp_path, capsys):
    out = tmp_path / "s.txt"
    code, _, _ = run(capsys, "generate", "--kind", "nos", "--k", "11", "--n", "3", "--out", str(out))
    assert code == 0
    text = out.read_text().strip()
    assert "," in text and "10" in text.split(",")
    code, _, _ = run(capsys, "verify", str(out), "--k", "11", "--n", "3", "--mode", "nos")
    assert code == 0


def test_verify_violation(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("000\n")
    code, out, _ = run(capsys, "verify", str(path), "--k", "3", "--n", "3", "--mode", "nos")
    assert code == 1
    assert out.strip() == "violation: i=0 j=0 transform=reverse-negate"
    code, out, _ = run(capsys, "verify", str(path), "--k", "3", "--n", "3", "--mode", "window")
    assert code == 1 and "transform=identity" in out


@pytest.mark.parametrize("content,msg", [
    ("0172\n", "out of range"),
    ("01 2\n", "whitespace"),
    ("01a\n", "non-numeric"),
    ("\n", "empty"),
    ("{not json", "JSON"),
])
def test_verify_bad_input(tmp_path, capsys, content, msg):
    path = tmp_path / "in.txt"
    path.write_text(content)
    code, _, err = run(capsys, "verify", str(path), "--k", "3", "--n", "3", "--mode", "nos")
    assert code == 2 and msg in err


def test_verify_missing_file_and_order(tmp_path, capsys):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope"), "--k", "3", "--n", "3", "--mode", "os")
    assert code == 2 and "cannot read" in err
    path = tmp_path / "s.txt"
    path.write_text("012\n")
    code, _, err = run(capsys, "verify", str(path), "--k", "3", "--mode", "os")
    assert code == 2 and "--n" in err


@pytest.mark.parametrize("argv,msg", [
    (["generate", "--kind", "nos", "--k", "2", "--n", "5"], "k must be"),
    (["generate", "--kind", "os", "--k", "3", "--n", "2"], "n must be"),
    (["counts", "--k", "2", "--n", "5"], "k must be"),
    (["table", "os_periods", "--k", "3", "--n", "3-5"], "n must be"),
])
def test_bad_params_exit_2(capsys, argv, msg):
    code, _, err = run(capsys, *argv)
    assert code == 2 and msg in err


def test_argparse_usage_errors(capsys):
    for argv in (["generate", "--kind", "x", "--k", "3", "--n", "3"], ["table", "n_i", "--k", "5-3", "--n", "3"], []):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_cap_override(monkeypatch, capsys):
    monkeypatch.setenv("OSEQ_MAX_RANK", "100")
    code, _, err = run(capsys, "generate", "--kind", "nos", "--k", "3", "--n", "5")
    assert code == 2 and "cap" in err
    code, _, err = run(capsys, "counts", "--k", "3", "--n", "5")
    assert code == 2


def test_internal_error_exit_3(monkeypatch, capsys):
    monkeypatch.setattr(verify, "find_violation", lambda *a: verify.Violation(0, 1, "identity"))
    code, _, err = run(capsys, "generate", "--kind", "nos", "--k", "3", "--n", "4")
    assert code == 3 and "internal error" in err


def test_counts(capsys):
    code, out, _ = run(capsys, "counts", "--k", "3", "--n", "6", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["s_bound"] == 316 and data["achieved_X"] == 318 and data["e_size"] == 294
    assert data["n_counts"] == data["n_counts_enumerated"] == [3, 3, 12]
    code, out, _ = run(capsys, "counts", "--k", "3", "--n", "6")
    assert code == 0 and "achieved_X" in out and "(3,3,12)" in out


def test_table_n_i(capsys):
    code, out, _ = run(capsys, "table", "n_i", "--k", "3-4", "--n", "4-6")
    assert code == 0
    assert "(3,3,12)" in out and "(7,2,7)" in out
    code, out, _ = run(capsys, "table", "n_i", "--k", "3", "--n", "6", "--format", "json")
    assert code == 0 and json.loads(out)


def test_table_os_periods(capsys):
    code, out, _ = run(capsys, "table", "os_periods", "--k", "3", "--n", "4-6", "--format", "json")
    assert code == 0
    recs = {r["n"]: r for r in json.loads(out)}
    assert recs[6]["bound"] == 303 and recs[6]["achieved"] == 303
    assert recs[5]["achieved"] >= recs[5]["bound"]


def test_table_xbound(capsys):
    code, out, _ = run(capsys, "table", "xbound", "--k", "3", "--n", "5-6")
    assert code == 0 and "!" not in out
