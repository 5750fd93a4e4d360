import json
import subprocess
import sys

import pytest

from chebtwo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_points_1_1(capsys):
    code, out = run(capsys, "points", "--k", "1", "--m", "1")
    assert code == 0
    doc = json.loads(out)
    extra = [p for p in doc["fixed_points"] if p["kind"] == "Extraneous"]
    assert [p["location"] for p in extra] == [[0.276393202, 0.0], [0.723606798, 0.0]]
    inf = [p for p in doc["fixed_points"] if p["kind"] == "Infinity"][0]
    assert inf["location"] == "Infinity" and inf["stability"] == "Repelling"
    assert sum(c["multiplicity"] for c in doc["critical_points"]) == 6


def test_points_6_4_multiplier(capsys):
    code, out = run(capsys, "points", "--k", "6", "--m", "4")
    assert json.loads(out)["fixed_points"][0]["multiplier"] == 0.763888889


@pytest.mark.parametrize("argv", [["points", "--k", "0", "--m", "1"], ["orbit", "--k", "1", "--m", "1", "--z0", "1"]])
def test_invalid_arguments_exit_2(argv, capsys):
    assert main(argv) == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["points", "--k", "x", "--m", "1"])
    assert exc.value.code == 2


def test_orbit(capsys):
    assert json.loads(run(capsys, "orbit", "--k", "6", "--m", "4", "--z0", "-1,0")[1])["verdict"] == "ToRoot0"
    assert json.loads(run(capsys, "orbit", "--k", "6", "--m", "4", "--z0", "2,0")[1])["verdict"] == "ToRoot1"
    doc = json.loads(run(capsys, "orbit", "--k", "6", "--m", "4", "--z0", "0.6,0", "--trace")[1])
    assert doc["trace"] == [[0.6, 0.0], "Infinity"] and doc["verdict"] == "Undecided"


def test_phi(capsys):
    assert json.loads(run(capsys, "phi", "--m", "1", "--y", "1")[1])["phi"] == 0.1796875
    assert json.loads(run(capsys, "phi", "--m", "1", "--y", "-1")[1])["phi"] == -0.1796875
    assert json.loads(run(capsys, "phi", "--m", "1", "--zeta")[1])["zeta"] == 0.733944913
    assert json.loads(run(capsys, "phi", "--m", "2", "--return-time", "10")[1])["return_time"] >= 1
    assert main(["phi", "--m", "2", "--return-time", "0.3"]) == 2
    assert main(["phi", "--m", "2", "--y", "0"]) == 2


def test_render(tmp_path, capsys):
    out = tmp_path / "f.ppm"
    code, text = run(capsys, "render", "--k", "2", "--m", "2", "--window", "-1:2:-1.5:1.5", "--px", "40x30", "--out", str(out))
    assert code == 0
    assert out.read_bytes().startswith(b"P6\n40 30\n255\n")
    fr = json.loads(text)["fractions"]
    assert fr["ToRoot0"] == pytest.approx(fr["ToRoot1"])
    first = out.read_bytes()
    run(capsys, "render", "--k", "2", "--m", "2", "--window", "-1:2:-1.5:1.5", "--px", "40x30", "--out", str(out))
    assert out.read_bytes() == first


def test_render_errors(tmp_path, capsys):
    base = ["render", "--k", "2", "--m", "2", "--px", "10x10"]
    assert main(base + ["--window", "-1:2:x:1", "--out", str(tmp_path / "a.ppm")]) == 2
    assert main(base + ["--window", "-1:2:-1", "--out", str(tmp_path / "a.ppm")]) == 2
    assert main(base + ["--window", "-1:2:-1:1", "--out", str(tmp_path / "no" / "a.ppm")]) == 3


def test_boundary(tmp_path, capsys):
    out = tmp_path / "b.json"
    code, text = run(capsys, "boundary", "--k", "2", "--m", "2", "--ys", "-2:2:5", "--tol", "1e-10", "--out", str(out))
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc == json.loads(text)
    assert all(abs(p[0] - 0.5) <= 1e-10 for p in doc["points"])
    assert main(["boundary", "--k", "2", "--m", "2", "--ys", "0:1", "--tol", "1e-10"]) == 2


def test_verify_small(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, text = run(capsys, "verify", "--kmax", "2", "--mmax", "2", "--seed", "7", "--out", str(out))
    assert code == 0 and json.loads(text)["all_passed"] is True
    assert json.loads(out.read_text())["seed"] == 7


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "chebtwo", "phi", "--m", "1", "--y", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["phi"] == 0.1796875
