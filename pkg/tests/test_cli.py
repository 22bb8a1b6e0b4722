import json
import subprocess
import sys

import pytest

from hameldual import parse
from hameldual.cli import run
from hameldual.serialize import diffop_from_json, functional_from_json, vec_from_json


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def call_json(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_transpose(capsys):
    d = call_json(capsys, "transpose", "x1*d2 - x2*d1", "--dims", "2")
    assert diffop_from_json(d) == -parse("x1*d2 - x2*d1")
    assert d["text"] == "x2*d1 - x1*d2"


def test_fundsol(capsys):
    d = call_json(capsys, "fundsol", "d1 + 1", "--order", "8")
    assert d["sequence"] == ["1", "1", "2", "6", "24", "120", "720", "5040", "40320"]
    assert functional_from_json(d).horizon == 8


def test_card(capsys):
    assert call_json(capsys, "card", "dim-dual", "--dim", "c", "--field-card", "c") == "c+"
    assert call_json(capsys, "card", "pow", "c", "aleph0") == "c"
    assert call_json(capsys, "card", "succ", "c") == "c+"
    assert call_json(capsys, "card", "max", "7", "aleph0") == "aleph0"
    assert call_json(capsys, "card", "of-space", "--dim", "aleph0", "--field-card", "c") == "c"
    table = call_json(capsys, "card", "table")
    assert {"space": "H**", "dim": "c++", "card": "c++"} in table


def test_apply(capsys):
    d = call_json(capsys, "apply", "x*d", "x^3 + 2*x")
    assert d["text"] == "3*x^3 + 2*x"
    assert vec_from_json(d["polynomial"]).as_dict() == {(3,): 3, (1,): 2}


def test_solve_dual_with_json(capsys):
    op = json.dumps({"dims": 1, "shift": 1, "default": "zero",
                     "columns": [[[n], [[[n + 1], "1"]]] for n in range(6)]})
    T = json.dumps({"dims": 1, "horizon": 5,
                    "moments": [[[n], str(v)] for n, v in enumerate([3, 1, 4, 1, 5, 9])]})
    d = call_json(capsys, "solve-dual", op, "--functional", T, "-N", "5")
    assert d["sequence"] == ["0", "3", "1", "4", "1", "5"]


def test_solve_dual_file_input(capsys, tmp_path):
    f = tmp_path / "t.json"
    f.write_text(json.dumps({"dims": 1, "horizon": 4, "moments": [[[0], "1"]]}))
    d = call_json(capsys, "solve-dual", "d + 1", "--functional", f"@{f}", "-N", "4")
    assert d["sequence"] == ["1", "-1", "2", "-6", "24"]


def test_regularity(capsys):
    d = call_json(capsys, "regularity", "d1^2 + d2^2", "-N", "3")
    assert d["probe"]["witness_text"] == "x1"
    assert d["flags"] == ["ConstantCoefficientsNonzero"]
    code, out, _ = call(capsys, "regularity", "x1*d2 - x2*d1", "-N", "2", "--text")
    assert code == 0 and "x1^2 + x2^2" in out


def test_convolve(capsys):
    S = json.dumps({"dims": 1, "horizon": 3, "moments": [[[0], "1"], [[2], "1"]]})
    T = json.dumps({"dims": 1, "atoms": [[["1"], [0], "1"]]})
    d = call_json(capsys, "convolve", S, T)
    # <S, (z+1)^n> with S = 1 + z^2 moments
    assert d["sequence"] == ["1", "1", "2", "4"]


def test_moments_and_weak_limit(capsys):
    d = call_json(capsys, "moments", "--piece", "-1/2", "1/2", "1", "-N", "4")
    assert d["sequence"] == ["1", "0", "1/12", "0", "1/80"]
    d = call_json(capsys, "moments", "--piece", "-1", "0", "1,1", "--piece", "0", "1", "1,-1", "-N", "2")
    assert d["sequence"] == ["1", "0", "1/6"]
    d = call_json(capsys, "weak-limit", "box", "-N", "5")
    assert d["sequence"] == ["1", "0", "0", "0", "0", "0"]


def test_weak_limit_divergent(capsys):
    fam = json.dumps({"moments": [[[0], [1], [1]], [[1], [0, 1], [1]]]})
    code, out, _ = call(capsys, "weak-limit", fam, "-N", "1")
    assert code == 1
    assert json.loads(out)["error"] == "Divergent"


def test_basis(capsys):
    vs = json.dumps([{"entries": [["a", "1"], ["b", "1"]]},
                     {"entries": [["a", "2"], ["b", "2"]]}])
    d = call_json(capsys, "basis", "is-free", vs)
    assert d["verdict"] == "Dependent"
    assert call_json(capsys, "basis", "rank", vs) == {"rank": 1}
    amb = json.dumps([{"entries": [["a", "1"]]}, {"entries": [["b", "1"]]}])
    d = call_json(capsys, "basis", "extend", json.dumps([{"entries": [["a", "1"], ["b", "1"]]}]), amb)
    assert len(d["vectors"]) == 2


def test_domain_error_exit_one(capsys):
    code, out, _ = call(capsys, "fundsol", "d", "-N", "3")
    assert code == 1
    err = json.loads(out)
    assert err["error"] == "NotInjective"
    assert err["witness_text"] == "1"


def test_syntax_error_exit_one(capsys):
    code, out, _ = call(capsys, "transpose", "d1 +")
    assert code == 1
    assert json.loads(out)["position"] == 4


@pytest.mark.parametrize("argv", [[], ["nope"], ["fundsol", "d"], ["card", "succ"],
                                  ["basis", "extend", "[]"], ["solve-dual", "{bad", "-N", "2"]])
def test_usage_errors_exit_two(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_output_file(capsys, tmp_path):
    out = tmp_path / "o.json"
    assert run(["card", "succ", "c", "--output", str(out)]) == 0
    assert json.loads(out.read_text()) == "c+"


def test_module_entry_point_deterministic():
    argv = [sys.executable, "-m", "hameldual", "regularity", "x1*d2 - x2*d1", "-N", "3"]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1]
    assert json.loads(runs[0])["probe"]["verdict"] == "KernelWitness"
