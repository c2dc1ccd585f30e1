import io
import json
import os
import subprocess
import sys

import pytest

from knotmoves.cli import main

DATA = os.path.join(os.path.dirname(__file__), "..", "demos", "data")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def test_color_trefoil_file():
    code, out = run("color", "--k", "3", os.path.join(DATA, "trefoil.pd"))
    assert code == 0
    assert out.splitlines()[0] == "tri = 9"


def test_color_json_agrees_with_text():
    for k in ("3", "5", "9"):
        _, text = run("color", "--k", k, "figure-eight")
        _, js = run("color", "--k", k, "figure-eight", "--json")
        rep = json.loads(js)
        assert text.splitlines()[0].endswith(f"= {rep['count']}")


def test_lagrangian_count():
    code, out = run("lagrangians", "--p", "3", "--n", "3", "--count")
    assert (code, out.strip()) == (0, "40")
    code, out = run("lagrangians", "--p", "3", "--n", "2", "--json")
    assert json.loads(out)["count"] == 4


def test_slope():
    assert run("slope", "2,1,1,2")[1].strip() == "13/5"
    assert run("slope", "--mq", "2,2")[1].strip() == "5/2"
    assert json.loads(run("slope", "2,2", "--json")[1]) == {"num": 5, "den": 2}


def test_reduce_trefoil():
    code, out = run("reduce", "--family", "n-move:3", "--depth", "4",
                    os.path.join(DATA, "trefoil.pd"))
    assert code == 0
    assert out.splitlines()[-1] == "U_2"
    assert out.splitlines()[0].startswith("M n ")


def test_reduce_exhausted_exit_code():
    code, out = run("reduce", "--family", "pq-move:2,2", "--nodes", "20", "--strategy", "best",
                    "8_18")
    assert code == 2
    assert out.startswith("exhausted")


def test_classify_and_boundary():
    path = os.path.join(DATA, "tangles.pd")
    code, out = run("classify", "--family", "n-move:3", "--depth", "3", "--name", "T4",
                    path, "--json")
    rep = json.loads(out)
    assert code == 0 and rep["basis_index"] == 2 and rep["moves"] == 1
    code, out = run("boundary", "--p", "13", "--name", "T2112", path)
    assert code == 0 and "lagrangian = true" in out


def test_move_and_sites():
    code, out = run("move", "U_2", "--list-sites")
    assert out.split() == ["*,1,2"]
    code, out = run("move", "U_2", "--kind", "n:3", "--site", "*,1,2")
    assert code == 0 and out.count("\nX ") == 3
    assert "# inverse: M n -3 @" in out


def test_census_generate_validate(tmp_path):
    code, out = run("census", "--n", "2", "--p", "5", "--max-crossings", "4")
    assert out.startswith("6 of 6")
    code, out = run("generate", "--max-crossings", "1", "--max-loops", "0", "--json")
    rep = json.loads(out)
    assert rep["count"] == len(rep["records"]) > 0
    f = tmp_path / "gen.pd"
    f.write_text("".join(rep["records"]))
    code, out = run("validate", str(f))
    assert code == 0 and out.startswith(f"ok: {rep['count']} records")


@pytest.mark.parametrize("text, where", [
    ("link a\nX 1 2 3\n", "line 2, column 1"),
    ("link a\nX 1 2 q 4\n", "line 2, column 7"),
])
def test_input_errors(tmp_path, capsys, text, where):
    f = tmp_path / "bad.pd"
    f.write_text(text)
    code, _ = run("validate", str(f))
    assert code == 1
    assert where in capsys.readouterr().err


def test_missing_input(capsys):
    assert run("color", "no_such_file.pd")[0] == 1
    assert "no such file" in capsys.readouterr().err
    assert run("move", "U_2", "--kind", "n:3", "--site", "0,5,6")[0] == 1


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "knotmoves.cli", "color", "trefoil"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.startswith("tri = 9")
