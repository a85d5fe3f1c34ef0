import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from ncgb.cli import main
from conftest import DATA, GOLDEN

DOWNUP = str(DATA / "downup.json")

# golden file -> argv; regenerate with `python tests/test_cli.py`
CASES = {
    "check_n2.txt": ["check", "--matrix-n", "2"],
    "gb_n2.txt": ["gb", "--matrix-n", "2"],
    "gb_n2.json": ["gb", "--matrix-n", "2", "--format", "json"],
    "dim_downup.txt": ["dim", "--input", DOWNUP, "--max-degree", "12"],
    "basis_n2.txt": ["basis", "--matrix-n", "2"],
    "table_n2.json": ["table", "--matrix-n", "2", "--format", "json"],
    "center_n2.txt": ["center", "--matrix-n", "2"],
    "decompose_n2.json": ["decompose", "--matrix-n", "2", "--format", "json"],
    "reps_n2.txt": ["reps", "--matrix-n", "2"],
    "growth_downup.txt": ["growth", "--input", DOWNUP],
    "oracle_n2_errata.txt": ["oracle-diff", "--matrix-n", "2", "--errata"],
}

SCHEMA_FOR = {"oracle-diff": "oracle_diff"}


def run(argv, capsys):
    code = main(argv + ["--quiet"])
    out = capsys.readouterr()
    return code, out.out, out.err


def schema(name):
    return json.loads(resources.files("ncgb").joinpath("schemas", name + ".json").read_text())


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    code, out, _ = run(CASES[name], capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name", sorted(CASES))
def test_deterministic(name, capsys):
    assert run(CASES[name], capsys)[1] == run(CASES[name], capsys)[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--matrix-n", "2"],
        ["check", "--input", str(DATA / "corrupted.json")],
        ["gb", "--matrix-n", "2"],
        ["dim", "--matrix-n", "2"],
        ["dim", "--input", DOWNUP],
        ["growth", "--input", DOWNUP],
        ["basis", "--matrix-n", "2"],
        ["mul", "--matrix-n", "2", "e[1,1]", "e[1,1]^3"],
        ["table", "--matrix-n", "2"],
        ["oracle-diff", "--matrix-n", "2"],
        ["oracle-diff", "--matrix-n", "2", "--errata"],
        ["center", "--matrix-n", "2"],
        ["decompose", "--matrix-n", "2"],
        ["reps", "--matrix-n", "2"],
    ],
)
def test_json_schemas(argv, capsys):
    _, out, _ = run(argv + ["--format", "json"], capsys)
    data = json.loads(out)
    jsonschema.validate(data, schema(SCHEMA_FOR.get(data["command"], data["command"])))


def test_triple_system_schema():
    s = schema("triple_system")
    for f in ("zero2.json", "downup.json", "corrupted.json"):
        jsonschema.validate(json.loads((DATA / f).read_text()), s)


def test_check(capsys):
    assert run(["check", "--matrix-n", "3"], capsys)[0] == 0
    assert run(["check", "--input", str(DATA / "zero2.json")], capsys)[0] == 0
    code, out, _ = run(["check", "--input", str(DATA / "corrupted.json")], capsys)
    assert code == 1 and "FAIL" in out and "antisymmetry" in out


def test_dim(capsys):
    assert run(["dim", "--matrix-n", "2"], capsys)[1] == "17\n"
    assert run(["dim", "--matrix-n", "3"], capsys)[1] == "37\n"
    code, out, _ = run(["dim", "--input", DOWNUP, "--max-degree", "12"], capsys)
    assert code == 0 and out.startswith("INFINITE\n")
    assert out.split("\n")[1].split()[1:8] == ["1", "2", "4", "6", "9", "12", "16"]


def test_gb_modes_identical(capsys):
    full = run(["gb", "--matrix-n", "2", "--mode", "full"], capsys)[1]
    paper = run(["gb", "--matrix-n", "2", "--mode", "paper"], capsys)[1]
    assert full == paper and len(full.splitlines()) == 25


@pytest.mark.parametrize(
    "left,right,want",
    [("e[1,1]^5", "1", "e[1,1]"), ("e[1,1]", "e[2,2]", "0"), ("e[1,2]", "e[2,1]*e[1,2]", "2*e[1,1]^2*e[1,2] - e[1,2]")],
)
def test_mul(left, right, want, capsys):
    code, out, _ = run(["mul", "--matrix-n", "2", left, right], capsys)
    assert code == 0 and out == want + "\n"


def test_oracle_diff(capsys):
    code, out, _ = run(["oracle-diff", "--matrix-n", "2", "--errata"], capsys)
    assert code == 0 and out.startswith("0 mismatches over 289 pairs")
    code, out, _ = run(["oracle-diff", "--matrix-n", "2"], capsys)
    assert code == 1 and out.startswith("2 mismatches")


def test_center(capsys):
    code, out, _ = run(["center", "--matrix-n", "3"], capsys)
    assert code == 0 and out.startswith("dimension 5\n")


def test_decompose(capsys):
    code, out, _ = run(["decompose", "--matrix-n", "2"], capsys)
    assert code == 0 and out.startswith("blocks: [1, 2, 2, 2, 2]\n")


def test_reps(capsys):
    code, out, _ = run(["reps", "--matrix-n", "2"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert sum(ln.endswith("PASS") for ln in lines) == 4
    assert sum(" vs " in ln and "trace" in ln for ln in lines) == 6


def test_exit_codes(capsys, tmp_path):
    assert run(["gb", "--matrix-n", "2", "--max-degree", "2"], capsys)[0] == 3
    code, out, err = run(["gb", "--matrix-n", "2", "--max-degree", "3"], capsys)
    assert code == 2 and "bound" in err and out
    assert run(["dim", "--input", str(tmp_path / "missing.json")], capsys)[0] == 3
    assert run(["mul", "--matrix-n", "2", "e[1,1", "1"], capsys)[0] == 3
    assert run(["center", "--input", DOWNUP], capsys)[0] == 3
    assert run(["decompose", "--input", str(DATA / "zero2.json")], capsys)[0] == 3
    assert run(["gb", "--input", DOWNUP, "--mode", "paper"], capsys)[0] == 3
    with pytest.raises(SystemExit):
        main(["dim", "--matrix-n", "2", "--input", DOWNUP])


def test_bound_exceeded_json(capsys):
    code, out, _ = run(["gb", "--matrix-n", "2", "--max-degree", "3", "--format", "json"], capsys)
    data = json.loads(out)
    assert code == 2 and data["bound_exceeded"] and data["bound"] == 3
    jsonschema.validate(data, schema("gb"))


def test_env_max_degree(capsys, monkeypatch):
    monkeypatch.setenv("NCGB_MAX_DEGREE", "3")
    assert run(["gb", "--matrix-n", "2"], capsys)[0] == 2
    monkeypatch.setenv("NCGB_MAX_DEGREE", "x")
    assert run(["gb", "--matrix-n", "2"], capsys)[0] == 3
    monkeypatch.setenv("NCGB_MAX_DEGREE", "3")
    assert run(["gb", "--matrix-n", "2", "--max-degree", "9"], capsys)[0] == 0


def test_output_file(capsys, tmp_path):
    p = tmp_path / "dim.json"
    assert run(["dim", "--matrix-n", "2", "--format", "json", "--output", str(p)], capsys)[1] == ""
    assert json.loads(p.read_text())["dim"] == 17


def test_progress_goes_to_stderr(capsys):
    assert main(["dim", "--matrix-n", "2"]) == 0
    out = capsys.readouterr()
    assert out.out == "17\n" and "degree" in out.err


def test_jobs_flag(capsys):
    a = run(["table", "--matrix-n", "2", "--jobs", "2"], capsys)[1]
    assert a == run(["table", "--matrix-n", "2"], capsys)[1]


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "ncgb.cli", "dim", "--matrix-n", "2", "--quiet"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "17\n"


if __name__ == "__main__":
    from contextlib import redirect_stdout
    import io

    for name, argv in CASES.items():
        buf = io.StringIO()
        with redirect_stdout(buf):
            main(argv + ["--quiet"])
        (GOLDEN / name).write_text(buf.getvalue())
