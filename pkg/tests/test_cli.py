import json

import pytest

from ybx import corpus
from ybx.cli import main
from ybx.serialize import dumps, load


def write(tmp_path, name, obj=None):
    p = tmp_path / f"{name}.json"
    p.write_text(corpus.render(name) if obj is None else dumps(obj), encoding="utf-8")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", ["z3_shift", "s3_conjugation", "flip2", "lyubashenko_involutive"])
def test_verify_ok(tmp_path, capsys, name):
    code, out, _ = run(capsys, "verify", write(tmp_path, name), "--json")
    assert code == 0
    assert json.loads(out)["verdict"] is True


@pytest.mark.parametrize("name", ["broken_braid", "broken_rack"])
def test_verify_negative(tmp_path, capsys, name):
    code, out, _ = run(capsys, "verify", write(tmp_path, name))
    assert code == 1
    payload = json.loads(out.strip().splitlines()[-1])
    assert payload["ok"] is False and payload["witness"] is not None


def test_brace_commands(tmp_path, capsys):
    f = write(tmp_path, "brace_z4")
    assert run(capsys, "brace-verify", f)[0] == 0
    op = tmp_path / "op.json"
    assert run(capsys, "brace-to-op", f, "-o", str(op))[0] == 0
    back = tmp_path / "back.json"
    assert run(capsys, "op-to-brace", str(op), "-o", str(back))[0] == 0
    assert load(back) == corpus.z4_brace()
    code, out, _ = run(capsys, "brace-to-cocycle", f)
    assert code == 0 and json.loads(out)["kind"] == "cocycle"
    assert run(capsys, "brace-verify", write(tmp_path, "broken_brace"))[0] == 1


def test_prim_commands(tmp_path, capsys):
    f = write(tmp_path, "prim_leibniz_d2")
    code, out, _ = run(capsys, "prim-check", f, "--json")
    d = json.loads(out)
    assert code == 0 and d["conditions_hold"] and d["braided"] and d["agrees"]
    code, out, _ = run(capsys, "prim-solve", f)
    assert code == 0 and json.loads(out)["kind"] == "pair"
    bad = write(tmp_path, "broken_prim_non_leibniz_d3")
    code, out, _ = run(capsys, "prim-check", bad)
    assert code == 1
    assert json.loads(out.strip().splitlines()[-1])["witness"]["triple"] == ["v1", "v2", "v3"]
    assert run(capsys, "prim-solve", bad)[0] == 1


@pytest.mark.parametrize("name", list(corpus.SEARCH_GOLDENS))
def test_prim_search_matches_golden(capsys, name):
    p, d = corpus.SEARCH_GOLDENS[name]
    code, out, _ = run(capsys, "prim-search", "--field", f"f{p}", "--dim", str(d), "--exhaustive", "--json")
    assert code == 0
    assert out == corpus.shipped_text(f"{name}.jsonl")


def test_prim_search_sampling_is_reproducible(capsys):
    args = ("prim-search", "--field", "f3", "--dim", "1", "--sample", "200", "--seed", "7", "--json")
    a = run(capsys, *args)
    b = run(capsys, *args)
    assert a == b and a[0] == 0


@pytest.mark.parametrize("argv", [
    ("prim-search", "--field", "f4", "--dim", "1", "--exhaustive"),
    ("prim-search", "--field", "f3", "--dim", "1"),
    ("prim-search", "--field", "f3", "--dim", "1", "--sample", "5"),
    ("prim-search", "--field", "f3", "--dim", "1", "--exhaustive", "--mask", "9"),
])
def test_prim_search_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "path" in json.loads(err)


def test_extend_writes_blocks(tmp_path, capsys):
    out = tmp_path / "doubled.json"
    assert run(capsys, "extend", write(tmp_path, "z3_shift"), "-o", str(out))[0] == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "doubled" and doc["blocks"] == {"X": [0, 3], "SX": [3, 6]}
    code, out2, _ = run(capsys, "verify", str(out), "--json")
    assert code == 0


def test_derive_jmap_braidrep(tmp_path, capsys):
    f = write(tmp_path, "s3_conjugation")
    code, out, _ = run(capsys, "derive", f)
    assert code == 0 and json.loads(out)["involutive_collapse"] is False
    code, out, _ = run(capsys, "derive", write(tmp_path, "z3_shift"))
    assert json.loads(out)["involutive_collapse"] is True
    code, out, _ = run(capsys, "jmap", f, "--n", "3")
    assert code == 0 and len(json.loads(out)["J"]) == 3
    code, out, _ = run(capsys, "braidrep", f, "--n", "3")
    assert code == 0 and len(json.loads(out)["generators"]) == 2


def test_present(tmp_path, capsys):
    code, out, _ = run(capsys, "present", write(tmp_path, "flip2"), "--json")
    d = json.loads(out)
    assert code == 0 and d["generators"] == ["x", "y"]
    code, _, err = run(capsys, "present", write(tmp_path, "prim_leibniz_d2", corpus.build("prim_leibniz_d2")))
    assert code == 2


def test_schema_errors_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{oops", encoding="utf-8")
    code, out, err = run(capsys, "verify", str(p))
    assert code == 2 and out == "" and json.loads(err)["path"] == "/"
    doc = json.loads(corpus.render("z3_shift"))
    doc["r"]["rows"][1].pop()
    p.write_text(json.dumps(doc), encoding="utf-8")
    code, _, err = run(capsys, "verify", str(p))
    assert code == 2 and json.loads(err)["path"] == "/r/rows/1"
    code, _, err = run(capsys, "brace-verify", write(tmp_path, "z3_shift"))
    assert code == 2 and json.loads(err)["path"] == "/kind"


def test_missing_file_and_bad_usage(tmp_path, capsys):
    assert run(capsys, "verify", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
