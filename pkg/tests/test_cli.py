import json

import pytest

from lorentzkm.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_parser_has_all_verbs():
    p = build_parser()
    for verb in ("gens", "basis", "lift", "classify", "verify", "chamber", "tables", "nonreflective"):
        assert p.parse_args([verb] + (["--t", "1"] if verb in ("basis", "chamber") else [])
                            + (["--t", "1", "--combo", "1,0"] if verb == "lift" else [])).verb == verb


def test_gens_text_and_json(capsys):
    code, out, err = run(capsys, "gens", "--name", "phi_0_1", "--prec", "2")
    assert code == 0 and out.startswith("phi_0_1: weight 0, index 1")
    assert "[gens]" in err
    code, out, _ = run(capsys, "gens", "--name", "phi_0_1", "--format", "json")
    assert code == 0 and "phi_0_1" in json.loads(out)


def test_unknown_generator(capsys):
    code, _, err = run(capsys, "gens", "--name", "phi_9_9")
    assert code == 2 and "unknown generator" in err


def test_basis_ok(capsys):
    code, out, _ = run(capsys, "basis", "--t", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["table1_mismatches"] == [] and len(data["forms"]) == 3


def test_lift_text(capsys):
    code, out, _ = run(capsys, "lift", "--t", "1", "--combo", "1,0", "--leading", "2")
    assert code == 0
    assert "rho (1/2,1/2,1/2)" in out and "weight 5" in out
    assert "+1 q^1/2 r^1/2 s^1/2" in out


def test_lift_bad_combo(capsys):
    assert run(capsys, "lift", "--t", "1", "--combo", "1,0,0")[0] == 2
    assert run(capsys, "lift", "--t", "1", "--combo", "x")[0] == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--t", "2")
    assert code == 0 and out.startswith("t=2: 7 solutions")
    code, out, _ = run(capsys, "classify", "--t", "36", "--format", "json")
    assert json.loads(out) == {"36": [[0, 1, 0]]}


def test_classify_unsupported_t(capsys):
    code, _, err = run(capsys, "classify", "--t", "5")
    assert code == 2 and "error" in err


def test_verify_one(capsys):
    code, out, _ = run(capsys, "verify", "--id", "delta5", "--prec", "6")
    assert code == 0 and out.startswith("delta5: OK")
    assert run(capsys, "verify", "--id", "nope")[0] == 2


def test_chamber(capsys):
    code, out, _ = run(capsys, "chamber", "--t", "1")
    assert code == 0 and "3 roots" in out
    code, out, _ = run(capsys, "chamber", "--t", "1", "--combo", "1,0", "--format", "json")
    assert code == 0 and json.loads(out)
    assert run(capsys, "chamber", "--t", "1", "--combo", "5,5")[0] == 2


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--table", "1", "--t", "3")
    assert code == 0 and "FAIL" not in out


def test_nonreflective(capsys):
    code, out, _ = run(capsys, "nonreflective", "--bound", "1800")
    assert code == 0 and out.startswith("n=1718: x=31")


@pytest.mark.parametrize("argv", [
    ["basis", "--t", "4", "--format", "json"],
    ["lift", "--t", "2", "--combo", "1,0,0", "--format", "json"],
    ["classify", "--format", "json"],
])
def test_json_is_deterministic(capsys, argv):
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "classify", "--t", "1", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text()) == {"1": [[0, 1], [1, 0], [1, 1]]}
