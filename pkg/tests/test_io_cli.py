from __future__ import annotations

import csv
import json
import subprocess
import sys

import pytest

from energeia import io
from energeia.cli import main
from energeia.complex import complete, parse_geometry
from energeia.errors import IoError, ShapeError
from energeia.matrices import build_L
from energeia.rings import (COMPLEX, GAUSSIAN, OCTONION, QUATERNION, RATIONAL, random_assignment,
                            symbolic_generators)


def test_geometry_round_trip():
    g = parse_geometry([[1], [2], [1, 2], [3]])
    doc = io.loads(io.dumps(io.geometry_to_json(g)))
    assert doc["schema"] == io.SCHEMA
    assert io.geometry_from_json(doc) == g


@pytest.mark.parametrize("ring", [RATIONAL, GAUSSIAN, COMPLEX, QUATERNION, OCTONION])
def test_energy_round_trip_is_exact(ring):
    g = complete(3)
    e = random_assignment(g, ring, seed=3)
    back = io.energy_from_json(io.loads(io.dumps(io.energy_to_json(e))), g)
    assert back.ring == ring
    assert back.values == e.values


def test_symbolic_energy_round_trip():
    e = symbolic_generators(complete(2), commutative=False, names=["a", "b", "c"])
    back = io.energy_from_json(io.energy_to_json(e), e.geometry)
    assert back.values == e.values


def test_format_errors_carry_location():
    with pytest.raises(io.FormatError) as info:
        io.loads('{"sets": [[1]\n', "broken.json")
    assert "broken.json:" in str(info.value)
    with pytest.raises(io.FormatError):
        io.geometry_from_json({"nope": 1})
    with pytest.raises(io.FormatError):
        io.geometry_from_json({"sets": [[0]]})
    with pytest.raises(io.FormatError):
        io.energy_from_json({"ring": "rational", "h": {"[1]": "1"}}, complete(2))


def test_missing_file():
    with pytest.raises(IoError):
        io.load_json("/nonexistent/file.json")


def test_matrix_csv():
    e = random_assignment(complete(2), RATIONAL, seed=1)
    rows = list(csv.reader(io.matrix_to_csv(build_L(e)).splitlines()))
    assert rows[0] == ["", "[1]", "[2]", "[1,2]"]
    assert len(rows) == 4
    with pytest.raises(ShapeError):
        io.matrix_to_csv(build_L(random_assignment(complete(2), QUATERNION, seed=1)))


# command line ----------------------------------------------------------------

@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.json"
    assert main(["gen", "--kind", "complete", "--n", "2", "--out", str(path)]) == 0
    return path


def test_gen_kinds(tmp_path, capsys):
    assert main(["gen", "--kind", "whitney", "--edges", "1-2,2-3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sets"] == [[1], [2], [3], [1, 2], [2, 3]]
    assert main(["gen", "--kind", "random", "--vertices", "4", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--kind", "random", "--vertices", "4", "--seed", "3"]) == 0
    assert capsys.readouterr().out == first
    assert main(["gen", "--kind", "sets", "--vertices", "3", "--count", "4"]) == 0
    assert len(json.loads(capsys.readouterr().out)["sets"]) == 4


def test_energize_and_energy_report(k2_file, tmp_path, capsys):
    h = tmp_path / "h.json"
    assert main(["energize", "--in", str(k2_file), "--sampler", "symbolic", "--names", "a,b,c",
                 "--out", str(h)]) == 0
    assert main(["energy", "--in", str(k2_file), "--h", str(h),
                 "--report", "chi,omega,omega3,curvature,fredholm"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["chi"] == "a + b + c"
    assert doc["curvature"]["[1,2]"] == "-c"
    assert doc["omega"] == "a^2 + 2*a*c + b^2 + 2*b*c + c^2"


def test_matrix_emit(k2_file, tmp_path, capsys):
    assert main(["matrix", "--in", str(k2_file), "--sampler", "free", "--emit", "L,g,S,gstarL"]) == 0
    doc = json.loads(capsys.readouterr().out)
    names = [m["name"] for m in doc["matrices"]]
    assert names == ["L", "g", "S", "gstarL"]
    assert doc["matrices"][0]["entries"][2] == ["x1", "x2", "x1 + x2 + x3"]
    out = tmp_path / "mats"
    assert main(["matrix", "--in", str(k2_file), "--sampler", "pm1", "--format", "csv",
                 "--out-dir", str(out)]) == 0
    assert sorted(p.name for p in out.iterdir()) == ["L.csv", "g.csv"]


def test_spectral_outputs(k2_file, tmp_path):
    report = tmp_path / "out" / "report.json"
    assert main(["spectral", "--in", str(k2_file), "--sampler", "ones", "--zeta", "0,1,0.5+2i",
                 "--flow-steps", "3", "--out", str(report)]) == 0
    doc = json.loads(report.read_text())
    assert doc["zeta"][0]["value"] == {"re": pytest.approx(3.0), "im": pytest.approx(0.0)}
    assert doc["hodge"]["betti"] == [1, 0]
    assert len(doc["flow"]) == 4
    assert (tmp_path / "out" / "zeta.csv").read_text().startswith("re(s),im(s)")
    assert len((tmp_path / "out" / "flow.csv").read_text().splitlines()) == 1 + 4 * 3


def test_spectral_complex_energy(k2_file, capsys):
    assert main(["spectral", "--in", str(k2_file), "--sampler", "u1", "--zeta", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert "L" not in doc
    assert doc["LstarL"]["positive"] == 3


def test_verify_exit_codes(k2_file, tmp_path, capsys):
    out = tmp_path / "verdicts.json"
    assert main(["verify", "--in", str(k2_file), "--sampler", "pm1", "--suite", "T1,T2,T3,T4",
                 "--out", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [l.split()[1] for l in lines] == ["pass"] * 4
    assert json.loads(out.read_text())["verdicts"][0] == {"theorem": "T1", "status": "pass"}
    assert main(["verify", "--in", str(k2_file), "--sampler", "ones", "--suite", "C_zeta_fe"]) == 1


def test_verify_noncomplex_exit_one(tmp_path, capsys):
    path = tmp_path / "nc.json"
    path.write_text(json.dumps({"schema": io.SCHEMA, "sets": [[1], [2], [1, 2, 3]]}))
    assert main(["verify", "--in", str(path), "--sampler", "symbolic", "--names", "x,y,z",
                 "--suite", "T1,T2,T3"]) == 1
    out = capsys.readouterr().out
    assert "x + y + 9*z" in out


@pytest.mark.parametrize("argv", [
    ["verify", "--in", "missing.json", "--sampler", "pm1"],
    ["verify", "--sampler", "pm1"],
    ["bogus"],
])
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2


def test_bad_inputs_exit_two(k2_file, tmp_path, capsys):
    assert main(["verify", "--in", str(k2_file), "--sampler", "nope"]) == 2
    assert main(["verify", "--in", str(k2_file), "--sampler", "pm1", "--suite", "T7"]) == 2
    assert main(["verify", "--in", str(k2_file)]) == 2
    assert main(["spectral", "--in", str(k2_file), "--sampler", "free"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["energize", "--in", str(bad), "--sampler", "pm1"]) == 2
    assert "bad.json:1" in capsys.readouterr().err


def test_module_entry_point(k2_file):
    proc = subprocess.run([sys.executable, "-m", "energeia", "verify", "--in", str(k2_file),
                           "--sampler", "pm1", "--suite", "T4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("T4")


def test_cli_is_deterministic(k2_file, capsys):
    args = ["energize", "--in", str(k2_file), "--sampler", "random:gaussian", "--seed", "5"]
    assert main(args) == 0
    a = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == a
