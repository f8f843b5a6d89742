import json
import subprocess
import sys

import pytest

from polytraj.cli import EVIDENCE_NOTE, main
from polytraj.serialize import loads
from polytraj.solid import build_solid
from polytraj.witness import terminal_point


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_default_target_reports_y_mismatch(capsys):
    code, out = run(capsys, "verify")
    assert code == 1
    assert "[FAIL] endpoint_equals_target" in out
    assert "y: expected ['-1/4', '-1/4', '0/1', '0/1']  computed ['-5/4', '-1/4', '0/1', '0/1']" in out


def test_verify_corrected_target(capsys):
    code, out = run(capsys, "verify", "--target", "corrected", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["diff"] == []
    assert payload["trajectory"]["status"]["vertex"] == payload["trajectory"]["start_vertex"]


def test_search_cube_empty(capsys, tmp_path):
    out_file = tmp_path / "cube.json"
    code, out = run(capsys, "search", "--solid", "cube", "--depth", "8", "--out", str(out_file))
    assert code == 0
    assert EVIDENCE_NOTE in out
    assert json.loads(out_file.read_text()) == []


def test_search_dodecahedron_json(capsys):
    code, out = run(capsys, "search", "--solid", "dodecahedron", "--depth", "7", "--format", "json")
    assert code == 0
    (t,) = loads(out)
    assert t.returns_to_start and t.crossings == 6
    code, out = run(capsys, "search", "--depth", "7", "--format", "json", "--all-classes", "--workers", "2")
    assert len(loads(out)) == 4


def test_trace_with_coefficients(capsys):
    T = terminal_point(build_solid("dodecahedron").descriptor)
    direction = ",".join(T.x.to_strings()) + ";" + ",".join(T.y.to_strings())
    code, out = run(capsys, "trace", "--solid", "dodecahedron", "--direction", direction, "--format", "json")
    assert code == 0
    t = loads(out)
    assert t.returns_to_start and t.developed_end == T
    code, out = run(capsys, "trace", "--witness-direction")
    assert code == 0 and "hit vertex 19" in out


def test_trace_invalid_direction(capsys):
    code = main(["trace", "--direction", "0,0,0,0;1,0,0,0"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_render_round_trip(capsys, tmp_path):
    traj = tmp_path / "t.json"
    main(["trace", "--witness-direction", "--out", str(traj)])
    svg, obj = tmp_path / "t.svg", tmp_path / "t.obj"
    assert main(["render-net", "--input", str(traj), "--out", str(svg)]) == 0
    assert main(["render-obj", "--input", str(traj), "--out", str(obj)]) == 0
    main(["render-net", "--witness", "--out", str(tmp_path / "w.svg")])
    assert svg.read_text() == (tmp_path / "w.svg").read_text()
    assert obj.read_text().count("\nl ") == 1


def test_oracle_command(capsys):
    code, out = run(capsys, "oracle", "--solid", "icosahedron", "--samples", "10", "--seed", "3")
    assert code == 0 and "OK" in out


@pytest.mark.parametrize("argv", [["search", "--bogus"], ["frobnicate"], ["search", "--solid", "prism"], []])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polytraj", "search", "--solid", "tetrahedron", "--depth", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "evidence only" in proc.stdout
