import json
import subprocess
import sys

import pytest

from hexaweb import cli


def run(*args):
    return subprocess.run([sys.executable, "-m", "hexaweb", *args], capture_output=True, text=True, timeout=120)


def test_verify_single_check_passes(capsys):
    assert cli.main(["verify", "--seed", "3,4,5", "--check", "common_x16", "--rings", "3"]) == 0
    out = capsys.readouterr().out
    assert "common_x16" in out and "PASS" in out and "1/1 checks passed" in out


def test_verify_all_reports_the_printed_s_prime_failure(capsys, tmp_path):
    path = tmp_path / "r.json"
    code = cli.main(["verify", "--seed", "3,4,5", "--all", "--json", str(path)])
    out = capsys.readouterr().out
    assert code == 1
    failed = [l for l in out.splitlines() if l.rstrip().endswith("FAIL") or " FAIL " in l]
    assert len(failed) == 1 and failed[0].startswith("directrix_s_prime_printed")
    report = json.loads(path.read_text())
    assert report["summary"]["total"] >= 20
    assert report["summary"]["passed"] == report["summary"]["total"] - 1


def test_verify_json_is_deterministic(tmp_path):
    paths = [tmp_path / f"{k}.json" for k in range(2)]
    for p in paths:
        cli.main(["verify", "--seed", "5,3,4", "--all", "--json", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_build_equilateral_focal_is_degenerate(capsys):
    assert cli.main(["build", "--seed", "equilateral", "--with", "focal"]) == 3
    assert "EquilateralDegenerate: X16 at infinity" in capsys.readouterr().err


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--tol", "bogus=1"],
        ["verify", "--tol", "point"],
        ["verify", "--check", "no_such_check"],
        ["build", "--seed", "1,2"],
        ["build", "--with", "teapot"],
        ["build", "--rings", "-1"],
        ["build", "--seed", "1,2,10"],
        ["loci", "--poncelet", "elliptic"],
    ],
)
def test_invalid_specs_exit_2(args, capsys):
    assert cli.main(args) == 2


def test_seed_and_vertices_are_exclusive():
    r = run("build", "--seed", "3,4,5", "--vertices", "0,0,1,0,0,1")
    assert r.returncode == 2


def test_build_svg_no_timestamp_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for p in (a, b):
        assert cli.main(["build", "--seed", "5,3,4", "--rings", "2", "--with", "grid,focal", "--svg", str(p), "--no-timestamp"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"<!--" not in a.read_bytes()


def test_build_json_and_satellite_summary(tmp_path, capsys):
    path = tmp_path / "s.json"
    assert cli.main(["build", "--with", "satellites", "--p", "0.3,1.7", "--json", str(path)]) == 0
    out = capsys.readouterr().out
    assert "rel_error=" in out
    data = json.loads(path.read_text())
    assert data["satellites"]["p"] == [0.3, 1.7]


def test_config_file_with_flag_override(tmp_path, capsys):
    cfg = tmp_path / "scene.json"
    cfg.write_text(json.dumps({"seed": [6, 5, 4], "rings": 3, "checks": ["snap_ratio"], "tolerances": {"snap": 1e-11}}))
    assert cli.main(["verify", "--config", str(cfg), "--rings", "1"]) == 0
    out = capsys.readouterr().out
    assert "snap_ratio" in out and "tol=1e-11" in out
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"seeds": [1, 1, 1]}))
    assert cli.main(["verify", "--config", str(bad)]) == 2


def test_verify_poncelet_prints_table(capsys):
    assert cli.main(["verify", "--poncelet", "brocard", "--samples", "20"]) == 0
    out = capsys.readouterr().out
    assert "sum_sq" in out and "5/5 checks passed" in out


def test_loci_csv(tmp_path, capsys):
    path = tmp_path / "l.csv"
    assert cli.main(["loci", "--poncelet", "homothetic", "--what", "hexagon_centroids", "--samples", "24", "--csv", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "t,quantity,x,y" and len(lines) == 1 + 3 * 24
    assert "ellipse" in capsys.readouterr().out


def test_module_entry_point():
    r = run("verify", "--check", "snap_angle")
    assert r.returncode == 0 and "PASS" in r.stdout
