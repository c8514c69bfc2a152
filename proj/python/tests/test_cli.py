import json
import os
import subprocess

import pytest

CLI = os.environ.get("SPHAERA_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="command-line tool not built")


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_pentagon_earthmap_f16():
    r = run("pentagon", "--family", "earthmap", "--f", "16", "--param-alpha", "0.5pi")
    assert r.returncode == 0
    p = json.loads(r.stdout)
    assert abs(p["delta"] - 0.5718588702012107) < 1e-12


def test_usage_errors_exit_2():
    assert run("pentagon", "--family", "tetra-sub", "--param-t", "0.3pi").returncode == 2
    assert run("pentagon").returncode == 2
    assert run("frobnicate").returncode == 2


def test_verify_and_layout_exit_codes(tmp_path):
    tiling = tmp_path / "t.json"
    pent = tmp_path / "p.json"
    assert run("tiling", "--generator", "earthmap", "--m", "4", "-o", str(tiling)).returncode == 0
    assert run("pentagon", "--family", "earthmap", "--f", "16", "--param-alpha", "1.0pi", "-o", str(pent)).returncode == 0
    assert run("verify", "--tiling", str(tiling), "--pentagon", str(pent)).returncode == 0
    env = dict(os.environ, SPHAERA_TOL="1e-30")
    assert run("verify", "--tiling", str(tiling), "--pentagon", str(pent), env=env).returncode == 1
    octa = tmp_path / "octa.json"
    assert run("tiling", "--generator", "octa", "-o", str(octa)).returncode == 0
    p24 = tmp_path / "p24.json"
    assert run("pentagon", "--family", "octa-sub", "--param-t", "0.05pi", "-o", str(p24)).returncode == 0
    # a Table 2 pentagon cannot tile the octahedral subdivision
    p24e = tmp_path / "p24e.json"
    assert run("pentagon", "--family", "earthmap", "--f", "24", "--param-alpha", "0.9pi", "-o", str(p24e)).returncode == 0
    assert run("verify", "--tiling", str(octa), "--pentagon", str(p24e)).returncode == 3


def test_export_formats(tmp_path):
    tiling = tmp_path / "t.json"
    pent = tmp_path / "p.json"
    run("tiling", "--generator", "earthmap", "--m", "5", "-o", str(tiling))
    run("pentagon", "--family", "earthmap", "--f", "20", "--param-alpha", "0.8pi", "-o", str(pent))
    obj = run("export", "--in", str(tiling), "--pentagon", str(pent), "--format", "obj")
    assert obj.returncode == 0
    assert sum(1 for l in obj.stdout.splitlines() if l.startswith("f ")) == 100
    assert "g b_edges" in obj.stdout
    svg = run("export", "--in", str(tiling), "--pentagon", str(pent), "--format", "svg")
    assert svg.returncode == 0 and svg.stdout.startswith("<svg")
    again = run("export", "--in", str(tiling), "--pentagon", str(pent), "--format", "svg")
    assert again.stdout == svg.stdout


def test_search_and_svg_ufo(tmp_path):
    r = run("search", "--system", "table3", "--f", "20", "--allowed",
            "ade,bde,bbc,abc,ccde,accc", "--out-dir", str(tmp_path))
    assert r.returncode == 0
    assert r.stdout.startswith("3 tilings")
    pent = tmp_path / "p.json"
    run("pentagon", "--family", "earthmap", "--f", "20", "--param-alpha", "0.8pi", "-o", str(pent))
    svg = run("export", "--in", str(tmp_path / "tiling_0.json"), "--pentagon", str(pent), "--format", "svg",
              "--mark-ufos")
    assert svg.returncode == 0
    assert '<g id="ufos"' in svg.stdout


def test_reproduce_table3():
    r = run("reproduce", "--table", "3", "--k", "2")
    assert r.returncode == 0
    assert r.stdout.count("PASS") == 8
