import json
import os
from fractions import Fraction

import pytest

from anosov import io
from anosov.catalog import heisenberg3, seven_dim_family
from anosov.cli import main


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def alg_json(tmp_path, alg, name="alg.json"):
    return write(tmp_path / name, io.algebra_to_dict(alg))


H3 = {"name": "h3", "dim": 3, "degrees": [1, 1, 2], "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]}


# -- io -------------------------------------------------------------------

def test_algebra_round_trip():
    for alg in (heisenberg3(), seven_dim_family(3)):
        text = io.dumps(io.algebra_to_dict(alg))
        back = io.algebra_from_dict(json.loads(text))
        assert back == alg
        assert io.dumps(io.algebra_to_dict(back)) == text


def test_rational_strings():
    assert io.rational_str(Fraction(-4, 5)) == "-4/5"
    assert io.rational_str(Fraction(6, 3)) == "2"
    assert io.parse_rational(" 3/5 ", "x") == Fraction(3, 5)
    assert io.parse_rational(7, "x") == 7


@pytest.mark.parametrize("bad, where", [
    ({"dim": 3, "brackets": [{"i": 2, "j": 1, "k": 3, "c": "1"}]}, "brackets[0]"),
    ({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 4, "c": "1"}]}, "brackets[0].k"),
    ({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1/0"}]}, "brackets[0].c"),
    ({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": 0.5}]}, "brackets[0].c"),
    ({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 1, "j": 2, "k": 3, "c": "2"}]},
     "brackets[1]"),
    ({"dim": 3, "degrees": [1, 2]}, "degrees"),
    ({"brackets": []}, "dim"),
])
def test_format_errors_name_location(bad, where):
    with pytest.raises(io.FormatError) as info:
        io.algebra_from_dict(bad)
    assert info.value.location == where


def test_matrix_must_be_square():
    with pytest.raises(io.FormatError):
        io.matrix_from_data([[1, 2], [3]])
    assert io.matrix_from_data({"matrix": [["1", "1/2"], [0, 1]]})[0][1] == Fraction(1, 2)


def test_atomic_write_leaves_no_temp_files(tmp_path):
    target = tmp_path / "sub" / "out.json"
    io.write_atomic(target, "one\n")
    io.write_atomic(target, "two\n")
    assert target.read_text() == "two\n"
    assert os.listdir(target.parent) == ["out.json"]


def test_bad_json_reports_position(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"dim": 3,\n "brackets": [}')
    with pytest.raises(io.FormatError, match=r"broken.json:2:"):
        io.load_json(p)


# -- validate -------------------------------------------------------------

def test_validate_ok(tmp_path, capsys):
    assert main(["validate", write(tmp_path / "h3.json", H3)]) == 0
    assert "PASS" in capsys.readouterr().out


def test_validate_jacobi_failure(tmp_path, capsys):
    bad = {"dim": 3, "degrees": [1, 1, 1], "brackets": [
        {"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 2, "j": 3, "k": 1, "c": "1"}, {"i": 1, "j": 3, "k": 1, "c": "1"}]}
    assert main(["validate", write(tmp_path / "bad.json", bad)]) == 1
    assert "Jacobi" in capsys.readouterr().out


def test_validate_grading_failure(tmp_path, capsys):
    bad = dict(H3, degrees=[1, 1, 3])
    assert main(["validate", write(tmp_path / "bad.json", bad)]) == 1
    assert "grading failure at (1, 2, 3)" in capsys.readouterr().out


@pytest.mark.parametrize("bad", [
    {"dim": 3, "brackets": [{"i": 3, "j": 3, "k": 1, "c": "1"}]},
    {"dim": 2, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}]},
    {"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "2/0"}]},
    {"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": 1.5}]},
])
def test_validate_input_errors(tmp_path, capsys, bad):
    assert main(["validate", write(tmp_path / "bad.json", bad)]) == 2
    assert "input error" in capsys.readouterr().err


def test_missing_file_and_bad_args(tmp_path):
    assert main(["validate", str(tmp_path / "nope.json")]) == 2
    assert main(["double", write(tmp_path / "h3.json", H3), "--a", "1"]) == 2
    assert main([]) == 2


# -- double ---------------------------------------------------------------

def test_double_h3(tmp_path, capsys):
    path = write(tmp_path / "h3.json", H3)
    out = tmp_path / "out"
    assert main(["double", path, "--out", str(out)]) == 0
    assert "ANOSOV" in capsys.readouterr().out
    cert = json.loads((out / "h3_double_a2.cert.json").read_text())
    assert cert["matrix"][:2] == [["2", "3", "0", "0", "0", "0"], ["1", "2", "0", "0", "0", "0"]]
    assert cert["matrix"][4][4:] == ["7", "12"]
    assert cert["flags"]["anosov"] is True
    assert (cert["expanding_dim"], cert["contracting_dim"], cert["classification_mode"]) == (3, 3, "exact")
    doubled = io.algebra_from_dict(json.loads((out / "h3_double_a2.json").read_text()))
    assert doubled.dim == 6


def test_double_filiform_blocks(tmp_path, capsys):
    assert main(["example", "filiform", "--k", "4", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    assert main(["double", str(tmp_path / "filiform4.json"), "--json"]) == 0
    cert = json.loads(capsys.readouterr().out)
    M = cert["matrix"]
    blocks = [[row[2 * i:2 * i + 2] for row in M[2 * i:2 * i + 2]] for i in range(5)]
    B, B2, B3 = [["2", "3"], ["1", "2"]], [["7", "12"], ["4", "7"]], [["26", "45"], ["15", "26"]]
    assert blocks == [B, B, B2, B3, [["97", "168"], ["56", "97"]]]


def test_double_seven_dim_needs_scale(tmp_path, capsys):
    path = alg_json(tmp_path, seven_dim_family(2))
    assert main(["double", path]) == 1
    assert "scale_basis_to_integer" in capsys.readouterr().err
    assert main(["double", path, "--scale", "--json"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["algebra"]["dim"] == 14 and cert["flags"]["anosov"] is True
    assert cert["parameters"]["scale"] == 5


def test_double_ungraded_fails(tmp_path, capsys):
    path = write(tmp_path / "u.json", {k: v for k, v in H3.items() if k != "degrees"})
    assert main(["double", path]) == 1
    assert "grad" in capsys.readouterr().err


# -- certify --------------------------------------------------------------

def test_certify(tmp_path, capsys):
    assert main(["example", "eight_dim", "--out", str(tmp_path)]) == 0
    capsys.readouterr()
    out = tmp_path / "c.json"
    assert main(["certify", str(tmp_path / "eight_dim.json"), str(tmp_path / "eight_dim.matrix.json"),
                 "--out", str(out)]) == 0
    assert json.loads(out.read_text())["flags"]["anosov"] is True


def test_certify_identity_fails(tmp_path, capsys):
    alg = write(tmp_path / "h3.json", H3)
    ident = write(tmp_path / "id.json", {"matrix": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})
    assert main(["certify", alg, ident]) == 1
    assert "NOT ANOSOV" in capsys.readouterr().out


def test_certify_shape_mismatch(tmp_path):
    alg = write(tmp_path / "h3.json", H3)
    m = write(tmp_path / "m.json", [[1, 0], [0, 1]])
    assert main(["certify", alg, m]) == 2


# -- example --------------------------------------------------------------

def test_example_list(capsys):
    assert main(["example", "--list"]) == 0
    out = capsys.readouterr().out
    for name in ("heisenberg3", "filiform", "seven_dim_family", "eight_dim", "free_two_step"):
        assert name in out


def test_example_outputs(capsys):
    assert main(["example", "filiform", "--k", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 6
    assert main(["example", "seven_dim_family", "--k", "2"]) == 0
    consts = {b["c"] for b in json.loads(capsys.readouterr().out)["brackets"]}
    assert {"3/5", "4/5"} <= consts
    assert main(["example", "free_two_step", "--r", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["algebra"]["dim"] == 9 and len(data["matrix"]) == 9


@pytest.mark.parametrize("argv", [["example", "nope"], ["example"], ["example", "heisenberg3", "--k", "3"],
                                  ["example", "filiform", "--k", "1"]])
def test_example_errors(argv):
    assert main(argv) == 2


# -- recheck --------------------------------------------------------------

def test_recheck_idempotent_and_tamper(tmp_path, capsys):
    path = write(tmp_path / "h3.json", H3)
    assert main(["double", path, "--out", str(tmp_path)]) == 0
    cert_path = tmp_path / "h3_double_a2.cert.json"
    assert main(["recheck", str(cert_path)]) == 0
    capsys.readouterr()
    assert main(["recheck", str(cert_path), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["consistent"] is True
    data = json.loads(cert_path.read_text())
    ok, diffs, fresh = io.recheck_certificate(data)
    assert ok and fresh == data

    data["matrix"][0][1] = "4"
    write(tmp_path / "t.json", data)
    assert main(["recheck", str(tmp_path / "t.json")]) == 1
    assert "INCONSISTENT" in capsys.readouterr().out

    data = json.loads(cert_path.read_text())
    data["flags"]["hyperbolic"] = False
    assert not io.recheck_certificate(data)[0]


# -- report ---------------------------------------------------------------

def read_tree(root):
    out = {}
    for dirpath, _, files in os.walk(root):
        for f in files:
            p = os.path.join(dirpath, f)
            with open(p, "rb") as fh:
                out[os.path.relpath(p, root)] = fh.read()
    return out


def test_report_deterministic(tmp_path, capsys):
    assert main(["report", "--out", str(tmp_path / "one")]) == 0
    assert main(["report", "--out", str(tmp_path / "two")]) == 0
    one, two = read_tree(tmp_path / "one"), read_tree(tmp_path / "two")
    assert one == two
    summary = json.loads(one["summary.json"])
    assert summary["all_anosov"] is True
    assert len(summary["entries"]) == 1 + 9 + 5 + 1 + 4
