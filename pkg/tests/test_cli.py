"""Command-line surface: formats, exit codes, determinism."""

import math
import os
import subprocess
import sys
from pathlib import Path

SRC = Path(__file__).resolve().parents[1] / "src"


def run_cli(*args, timeout=120):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "circgeo", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=timeout,
    )


# ---------------------------------------------------------------- classify


def test_classify_spacelike_line():
    result = run_cli("classify", "--metric", "1,0", "--vector", "1,1,1")
    assert result.returncode == 0
    assert result.stdout == "character=spacelike cos_phi=1 phi_rad=0 f_uu=6\n"


def test_classify_null():
    result = run_cli("classify", "--metric", "1,0", "--vector", "1,0,0")
    assert result.returncode == 0
    assert "character=null" in result.stdout


def test_classify_invalid_metric_exits_2():
    result = run_cli("classify", "--metric", "1,1", "--vector", "1,0,0")
    assert result.returncode == 2
    assert "error" in result.stderr


def test_classify_zero_vector_exits_2():
    result = run_cli("classify", "--metric", "1,0", "--vector", "0,0,0")
    assert result.returncode == 2


def test_classify_malformed_vector_exits_2():
    result = run_cli("classify", "--metric", "1,0", "--vector", "1,oops,0")
    assert result.returncode == 2


# ---------------------------------------------------------------- batch


def test_batch_roundtrip(tmp_path):
    csv = tmp_path / "in.csv"
    out = tmp_path / "report.txt"
    csv.write_text("x,y,z\n1,2,3\n1,0,0\n0,0,0\n1,-1,0\n5,5,5\n", encoding="utf-8")
    result = run_cli("classify-batch", "--metric", "1,0", "--input", str(csv), "--output", str(out))
    assert result.returncode == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "metric a=1 b=0"
    assert lines[1].startswith("tolerance eps_null=")
    assert lines[2] == "rows n=5"
    rows = [line for line in lines if line.startswith("row ")]
    assert len(rows) == 5
    for i, row in enumerate(rows):
        assert f"index={i} " in row
    assert "character=null" in rows[1]
    assert "character=error:zero-vector" in rows[2]
    assert "character=timelike" in rows[3]
    assert "character=spacelike" in rows[4]


def test_batch_header_only(tmp_path):
    csv = tmp_path / "empty.csv"
    out = tmp_path / "report.txt"
    csv.write_text("x,y,z\n", encoding="utf-8")
    result = run_cli("classify-batch", "--metric", "1,0", "--input", str(csv), "--output", str(out))
    assert result.returncode == 0
    assert "rows n=0" in out.read_text(encoding="utf-8")


def test_batch_bad_header_exits_2(tmp_path):
    csv = tmp_path / "bad.csv"
    csv.write_text("a,b,c\n1,2,3\n", encoding="utf-8")
    result = run_cli(
        "classify-batch", "--metric", "1,0", "--input", str(csv), "--output", str(csv) + ".out"
    )
    assert result.returncode == 2
    assert "line 1" in result.stderr


def test_batch_bad_row_names_line(tmp_path):
    csv = tmp_path / "bad_row.csv"
    csv.write_text("x,y,z\n1,2,3\n4,nope,6\n", encoding="utf-8")
    result = run_cli(
        "classify-batch", "--metric", "1,0", "--input", str(csv), "--output", str(csv) + ".out"
    )
    assert result.returncode == 2
    assert "line 3" in result.stderr


# ---------------------------------------------------------------- qbasis


def test_qbasis_identity_metric():
    result = run_cli("qbasis", "--metric", "1,0")
    assert result.returncode == 0
    u_line = result.stdout.splitlines()[0]
    values = [float(p) for p in u_line.split("=")[1].split()]
    s3 = math.sqrt(3.0)
    expected = [(1.0 + s3) / 3.0, (1.0 - s3) / 3.0, 1.0 / 3.0]
    assert max(abs(a - b) for a, b in zip(values, expected)) <= 1e-12
    assert "gram_residual=" in result.stdout


def test_qbasis_general_metric():
    result = run_cli("qbasis", "--metric", "2,1")
    assert result.returncode == 0


def test_qbasis_invalid_metric():
    assert run_cli("qbasis", "--metric", "1,1").returncode == 2


# ---------------------------------------------------------------- quadric


def test_quadric_cone():
    result = run_cli("quadric", "--r2", "0")
    assert result.returncode == 0
    assert "class=cone" in result.stdout
    assert "x'^2+y'^2-2z'^2 = 0" in result.stdout
    assert "character=null" in result.stdout


def test_quadric_two_sheets_equation():
    result = run_cli("quadric", "--r2", "2")
    assert "class=two-sheets" in result.stdout
    assert "x'^2+y'^2-2z'^2 = -2" in result.stdout


def test_quadric_mesh_file(tmp_path):
    mesh = tmp_path / "out.obj"
    result = run_cli("quadric", "--r2", "-1", "--mesh", str(mesh), "--samples", "6,9")
    assert result.returncode == 0
    lines = mesh.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 6 * 9  # one-sheet surface: single branch
    for line in lines:
        parts = line.split()
        assert parts[0] == "v" and len(parts) == 4
        x, y, z = (float(p) for p in parts[1:])
        assert abs(x * x + y * y - 2.0 * z * z - 1.0) <= 1e-9 * 2.0


def test_quadric_bad_samples_exit_2(tmp_path):
    mesh = tmp_path / "out.obj"
    result = run_cli("quadric", "--r2", "1", "--mesh", str(mesh), "--samples", "1,2")
    assert result.returncode == 2


# ---------------------------------------------------------------- conic


def test_conic_right_angle_hyperbola():
    result = run_cli("conic", "--cos-phi", "0", "--r2", "1")
    assert result.returncode == 0
    assert "A=0 B=1 C=0" in result.stdout
    assert "discriminant=1" in result.stdout
    assert "class=hyperbola" in result.stdout
    assert "equation=xy = 0.5" in result.stdout
    assert "extension" not in result.stdout


def test_conic_circle():
    result = run_cli("conic", "--cos-phi", "-0.5", "--r2", "-1")
    assert result.returncode == 0
    assert "class=circle" in result.stdout
    assert "equation=x^2+y^2 = 1" in result.stdout
    assert "radius=1" in result.stdout


def test_conic_extension_flag():
    result = run_cli("conic", "--cos-phi", "-0.4", "--r2", "1")
    assert result.returncode == 0
    assert "class=no-real-points" in result.stdout
    assert "extension=true" in result.stdout


def test_conic_phi_input():
    result = run_cli("conic", "--phi", "1.5707963267948966", "--r2", "1")
    assert result.returncode == 0
    assert "class=hyperbola" in result.stdout


def test_conic_out_of_domain_phi_exits_2():
    assert run_cli("conic", "--phi", "2.5", "--r2", "0").returncode == 2


def test_conic_requires_exactly_one_angle_flag():
    assert run_cli("conic", "--r2", "1").returncode == 2
    assert (
        run_cli("conic", "--phi", "1.0", "--cos-phi", "0.5", "--r2", "1").returncode == 2
    )


# ---------------------------------------------------------------- intersect / verify


def test_intersect_output():
    result = run_cli("intersect")
    assert result.returncode == 0
    assert "x'^2+y'^2 = 0.6666666666666666" in result.stdout
    assert "z' = ±0.5773502691896258" in result.stdout


def test_verify_small_run_passes():
    result = run_cli("verify", "--seed", "42", "--trials", "50")
    assert result.returncode == 0
    assert "result=pass" in result.stdout


def test_verify_deterministic_bytes():
    a = run_cli("verify", "--seed", "9", "--trials", "60")
    b = run_cli("verify", "--seed", "9", "--trials", "60")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout


def test_verify_bad_trials_exits_2():
    assert run_cli("verify", "--trials", "0").returncode == 2
