import json
import os
import subprocess

import pytest

TOOL = os.environ.get("DHANKEL_TOOL")


def run_tool(tmp_path, doc, *args):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(doc))
    return subprocess.run([TOOL, doc["command"], "--config", str(cfg), *args], capture_output=True, text=True)


@pytest.mark.skipif(not TOOL, reason="DHANKEL_TOOL not set")
def test_classify_json(tmp_path):
    doc = {"command": "classify", "symbol": {"type": "powerlog", "alpha": 1, "beta": 1.5}}
    out = run_tool(tmp_path, doc)
    assert out.returncode == 0, out.stderr
    report = json.loads(out.stdout)
    assert report["command"] == "classify"
    assert report["results"]["verdict"] == "compact"


@pytest.mark.skipif(not TOOL, reason="DHANKEL_TOOL not set")
def test_csv_output(tmp_path):
    doc = {"command": "sections", "symbol": {"type": "hilbert"}, "n_grid": [8, 16, 32]}
    out = run_tool(tmp_path, doc, "--out", str(tmp_path / "out"), "--format", "csv")
    assert out.returncode == 0, out.stderr
    lines = (tmp_path / "out" / "section_norm.csv").read_text().splitlines()
    assert lines[0] == "x,lower,mid,upper"
    assert len(lines) == 4


@pytest.mark.skipif(not TOOL, reason="DHANKEL_TOOL not set")
def test_bad_config_exit_code(tmp_path):
    doc = {"command": "classify", "symbol": {"type": "powerlog", "alpha": "x", "beta": 1}}
    out = run_tool(tmp_path, doc)
    assert out.returncode == 2
    assert "/symbol/alpha" in out.stderr


@pytest.mark.skipif(not TOOL, reason="DHANKEL_TOOL not set")
def test_seed_override(tmp_path):
    doc = {"command": "random-sim", "symbol": {"type": "powerlog", "alpha": 1, "beta": 1.5},
           "replicas": 2, "seed": 1, "n": 32, "m_grid": [0, 8]}
    out = run_tool(tmp_path, doc, "--seed-override", "42")
    assert out.returncode == 0, out.stderr
    assert json.loads(out.stdout)["provenance"]["seed"] == 42


def test_module():
    dhankel = pytest.importorskip("dhankel")
    s = dhankel.SymbolSeq.powerlog(1.0, 0.0)
    assert abs(s.value(4) - 0.2) < 1e-15
    assert dhankel.fourth_moment_exact_rademacher([3.0, 4.0]) == 1201.0
