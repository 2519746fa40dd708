import json
import subprocess
import sys

import pytest

from vfilt.cli import main
from vfilt.spaces import E6_FAMILY_JSON


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bfun(capsys):
    code, out, _ = run(capsys, "bfun", "--space", "det", "--n", "2", "--weight", "0,0")
    assert code == 0 and out.strip() == "(s+1)(s+2)"


def test_pfun(capsys):
    code, out, _ = run(capsys, "pfun", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "3")
    assert out.strip() == "(s+1)(s+2)^2"


def test_integer_outputs(capsys):
    base = ["--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "2"]
    assert run(capsys, "--json", "nu", *base)[1] and json.loads(run(capsys, "--json", "nu", *base)[1]) == {"nu": 2}
    doc = json.loads(run(capsys, "--json", "weight-level", *base)[1])
    assert doc == {"weight_level": 2, "composition_factor": 2}
    assert json.loads(run(capsys, "--json", "hodge-level", *base)[1]) == {"hodge_level": 1}


def test_v_ideal_and_v_cap_f(capsys):
    _, out, _ = run(capsys, "v-ideal", "--space", "det", "--n", "2", "--weight=0,-2", "--alpha", "1/2")
    assert out.strip() == "(s-1)s"
    _, out, _ = run(capsys, "v-cap-f", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "0", "--k", "1")
    assert out.split("\n")[:2] == ["1", "s"]


def test_ideal_e6(capsys):
    code, out, _ = run(capsys, "--json", "ideal", "--space", "e6", "--k", "5", "--alpha", "1/10", "--degree-bound", "8")
    doc = json.loads(out)
    assert code == 0
    assert [0, 0, 0] not in doc["weights"] and [0, 1, 0] in doc["weights"]
    assert doc["primary_decomposition"] == [
        {"t": 1, "ideal": "I_1", "exponent": 0},
        {"t": 2, "ideal": "I_2", "exponent": 1},
    ]
    # every weight is in I_2 = {b_2 + b_3 >= 1}
    assert all(w[1] + w[2] >= 1 for w in doc["weights"])


def test_character_and_grv(capsys):
    code, out, _ = run(
        capsys, "--json", "character", "--space", "det", "--n", "2", "--alpha", "1", "--level", "2", "--mode", "grW", "--degree-bound", "2"
    )
    assert [w["lambda"] for w in json.loads(out)["weights"]] == [[-2, -2], [-1, -2], [-1, -1]]
    code, out, _ = run(capsys, "--json", "grv", "--space", "det", "--n", "2", "--alpha", "2", "--level", "0", "--degree-bound", "1")
    entries = json.loads(out)["entries"]
    assert {"weight": [0, 0], "nu": 2, "exponent": 1} in entries


def test_fdf(capsys):
    code, out, _ = run(capsys, "--json", "fdf-matrices", "--space", "det", "--n", "2", "--weight=-1,-1", "--alpha", "1", "--level", "5")
    doc = json.loads(out)
    assert doc["C"] == [["-1"]] and doc["f"] == [["1", "0"], ["0", "1"]]


def test_fs_test(capsys, tmp_path):
    pi = tmp_path / "pi.json"
    pi.write_text(json.dumps({"r_lambda": -1, "pi": {"3": [0, 1, 2, 3]}}))
    args = ["fs-test", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "3", "--k", "3", "--pi-file", str(pi)]
    assert run(capsys, *args)[1].strip() == "nonzero"
    pi.write_text(json.dumps({"r_lambda": -1, "pi": {"3": [0, 1, 2]}}))
    assert run(capsys, *args)[1].strip() == "zero"
    pi.write_text(json.dumps({"r_lambda": -1, "pi": {"3": [-1]}}))
    assert run(capsys, *args)[0] == 1


def test_space_file(capsys, tmp_path):
    path = tmp_path / "e6.json"
    path.write_text(json.dumps(E6_FAMILY_JSON))
    _, out, _ = run(capsys, "bfun", "--space-file", str(path), "--weight", "1,0,0")
    assert out.strip() == "(s+1)(s+5)(s+10)"
    path.write_text(json.dumps({**E6_FAMILY_JSON, "r": ["1"]}))
    assert run(capsys, "bfun", "--space-file", str(path), "--weight", "1,0,0")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["bfun", "--space", "det", "--weight", "0,0"],
        ["bfun", "--space", "det", "--n", "2", "--weight", "0,1"],
        ["bfun", "--space", "nope", "--n", "2", "--weight", "0,0"],
        ["pfun", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "x"],
        ["ideal", "--space", "det", "--n", "2", "--k", "1", "--alpha", "0"],
        ["ideal", "--space", "det", "--n", "2", "--k", "1", "--alpha", "2", "--route", "inequality"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(main(argv))
    assert exc.value.code == 1


def test_mismatch_exits_2(capsys, monkeypatch):
    import vfilt.spaces as spaces

    def broken(self, k, alpha):
        return [spaces.Inequality(1, 10**6, "J_1")]

    monkeypatch.setattr(spaces.DeterminantFamily, "inequalities", broken)
    assert run(capsys, "ideal", "--space", "det", "--n", "2", "--k", "1", "--alpha", "1", "--degree-bound", "1")[0] == 2


def test_json_round_trip(capsys):
    argv = ["--json", "ideal", "--space", "pfaffian", "--n", "4", "--k", "3", "--alpha", "1/2", "--degree-bound", "3"]
    first = json.loads(run(capsys, *argv)[1])
    second = json.loads(run(capsys, *argv)[1])
    assert first == second
    assert json.loads(json.dumps(first)) == first


def test_check_small(capsys):
    code, out, _ = run(capsys, "check", "--seed", "3", "--cases", "5")
    assert code == 0 and "FAIL" not in out


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "vfilt.cli", "bfun", "--space", "e6", "--weight", "0,0,0"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "(s+1)(s+5)(s+9)"
