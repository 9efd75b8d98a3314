import csv
import io
import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from qespoly.cli import run

SCHEMA = json.loads((pathlib.Path(__file__).parents[1] / "docs" / "output_schema.json").read_text())

PT_ARGS = ["--family", "poschl-teller", "--L", "1", "--A", "2", "--q", "0.5", "--alpha", "1", "--twoj", "2"]
SX_ARGS = ["--family", "sextic", "--L", "0", "--b", "1", "--qa2", "0.5", "--twoj", "1"]

COMMANDS = [
    ["spectrum", *PT_ARGS],
    ["spectrum", *PT_ARGS, "--method", "both"],
    ["spectrum", *PT_ARGS, "--method", "tridiagonal", "--precision", "extended"],
    ["spectrum", "--family", "pt-anharmonic", "--b", "0.1", "--qa2", "1", "--ell", "0", "--twoj", "2"],
    ["polytable", "--family", "sextic", "--twoj", "3", "--b", "1", "--qa2", "1", "--L", "0"],
    ["wavefunction", *SX_ARGS, "--n", "21", "--normalize"],
    ["wavefunction", "--family", "generalized-pt", "--L", "1", "--A", "3", "--q", "0.5", "--twoj", "2", "--normalize"],
    ["wavefunction", "--family", "scarf-pt", "--L", "1", "--A", "2", "--q", "0.3", "--twoj", "1", "--n", "11"],
    ["transform-check", "--L", "1", "--A", "2", "--q", "0.3", "--twoj", "2"],
    ["verify", *SX_ARGS],
    ["verify", "--family", "scarf-pt", "--L", "1", "--A", "2", "--q", "0.3", "--twoj", "1"],
]


def _json(capsys, argv):
    status = run(argv)
    return status, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a[:2]))
def test_outputs_validate(capsys, argv):
    status, out = _json(capsys, argv)
    assert status == 0, out.get("error")
    jsonschema.validate(out, SCHEMA)
    assert out["command"] == argv[0]


def test_bench_daniel_validates(capsys):
    status, out = _json(capsys, ["bench-daniel"])
    assert status == 0 and out["results"]["pass"]
    jsonschema.validate(out, SCHEMA)


def test_spectrum_example(capsys):
    _, out = _json(capsys, ["spectrum", *PT_ARGS])
    assert len(out["results"]["lambda_roots"]) == 3
    assert len(out["results"]["energies"]) == 3


def test_polytable_example(capsys):
    _, out = _json(capsys, ["polytable", "--family", "sextic", "--twoj", "3", "--b", "1", "--qa2", "1", "--L", "0"])
    polys = out["results"]["polynomials"]
    assert [p["m"] for p in polys] == list(range(5))
    assert polys[4]["coefficients"][0] == pytest.approx(20.25, abs=1e-12)


def test_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"o{k}.json"
        assert run(["spectrum", *PT_ARGS, "--method", "both", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_csv_layout(capsys):
    assert run(["wavefunction", *SX_ARGS, "--n", "5", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["x", "re_psi", "im_psi", "v_re", "v_im"]
    assert len(rows) == 6
    assert all(len(r) == 5 for r in rows)
    float(rows[1][0])


def test_exit_codes(capsys):
    status, out = _json(capsys, ["spectrum", "--family", "sextic", "--L", "0"])
    assert status == 1 and out["error"]["type"] == "ParameterError"
    jsonschema.validate(out, SCHEMA)
    status, out = _json(capsys, ["polytable", *SX_ARGS, "--format", "csv"])
    assert status == 1
    status, out = _json(capsys, ["wavefunction", *PT_ARGS, "--normalize", "--x-min", "0.1", "--x-max", "0.5", "--n", "11"])
    assert status == 2 and out["error"]["type"] == "NonNormalizableError"
    jsonschema.validate(out, SCHEMA)
    assert run(["nonsense"]) == 1
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qespoly", "spectrum", *PT_ARGS], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["family"] == "poschl-teller"
