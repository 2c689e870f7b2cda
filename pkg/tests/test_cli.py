import json
import os
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "kummerlat"]
SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")


def run_cli(*args, env=None):
    full_env = dict(os.environ)
    full_env["PYTHONPATH"] = SRC + os.pathsep + full_env.get("PYTHONPATH", "")
    if env:
        full_env.update(env)
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=full_env
    )


def test_census_text():
    res = run_cli("census", "--m", "24", "--max-rank", "19")
    assert res.returncode == 0
    assert "total: 18" in res.stdout


def test_census_json():
    res = run_cli("census", "--m", "24", "--max-rank", "19", "--json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["count"] == 18
    assert data["m"] == "24/1"
    assert all(cfg["m"] == "24/1" for cfg in data["configs"])


def test_census_minimal():
    res = run_cli("census", "--m", "3/2", "--max-rank", "19", "--json")
    data = json.loads(res.stdout)
    assert data["count"] == 1
    assert data["configs"][0]["A"] == {"1": 1}


def test_census_12_9():
    res = run_cli("census", "--m", "12", "--max-rank", "9")
    assert "8A1" in res.stdout
    assert "3A1+2A3" in res.stdout


def test_kummer_q8hat_json():
    res = run_cli("kummer", "--group", "Q8hat", "--json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["index"] == 16
    assert data["disc_K"] == [2, 4, 4]
    assert data["root_pairs_F"] == 37
    assert data["root_pairs_K"] == 37
    assert data["roots_equal"] is True
    assert len(data["even_sets"]) == 3


def test_kummer_t24hat_json():
    res = run_cli("kummer", "--group", "T24hat", "--json")
    data = json.loads(res.stdout)
    assert data["index"] == 3
    assert data["disc_K"] == [6, 12, 12]
    assert data["root_pairs_K"] == 39


def test_kummer_z2():
    res = run_cli("kummer", "--group", "Z2", "--json")
    data = json.loads(res.stdout)
    assert data["config"] == "16A1"
    assert data["rank"] == 16
    assert data["index"] is None


def test_obstruct_excluded():
    res = run_cli("obstruct", "--config", "11A1+2A3", "--json")
    assert res.returncode == 0  # Excluded is data, not an error
    data = json.loads(res.stdout)
    assert data["verdict"] == "Excluded"


def test_obstruct_unobstructed():
    res = run_cli("obstruct", "--config", "16A1", "--json")
    data = json.loads(res.stdout)
    assert data["verdict"] == "NoObstructionFound"


def test_obstruct_C3_cover():
    res = run_cli("obstruct", "--config", "5A1+A3+A7+D4", "--json")
    data = json.loads(res.stdout)
    assert data["verdict"] == "Excluded"
    covers = [s for s in data["steps"] if s["kind"] == "CoverRankExceeds"]
    assert any("2A7" in s["cover_config"] and s["cover_rank"] == "20" for s in covers)


def test_torus_q8hat():
    res = run_cli("torus", "--group", "Q8hat", "--json")
    data = json.loads(res.stdout)
    assert data["config"] == "A1+6A3"
    assert len(data["points"]) == 16
    assert all("abcd" in p for p in data["points"])


def test_torus_neg1():
    res = run_cli("torus", "--group", "neg1", "--json")
    data = json.loads(res.stdout)
    assert data["config"] == "16A1"


def test_torus_t24hat():
    res = run_cli("torus", "--group", "T24hat", "--json")
    data = json.loads(res.stdout)
    assert data["config"] == "4A2+2A3+A5"


def test_torus_lieberman():
    res = run_cli("torus", "--group", "lieberman", "--e1", "1/2,0", "--e2", "0,1/2", "--json")
    data = json.loads(res.stdout)
    assert data["fixed_point_free"] is True
    assert data["config"] == "8A1"


def test_usage_error_exit_2():
    res = run_cli("obstruct", "--config", "2D3")
    assert res.returncode == 2
    res = run_cli("census")
    assert res.returncode == 2
    res = run_cli("kummer", "--group", "nope")
    assert res.returncode == 2


def test_deterministic_output():
    a = run_cli("obstruct", "--config", "5A1+A3+A7+D4", "--json").stdout
    b = run_cli("obstruct", "--config", "5A1+A3+A7+D4", "--json").stdout
    assert a == b
    a = run_cli("kummer", "--group", "T24hat", "--json").stdout
    b = run_cli("kummer", "--group", "T24hat", "--json").stdout
    assert a == b


def test_thread_env_accepted():
    res = run_cli("census", "--m", "3/2", "--max-rank", "5",
                  env={"KUMMERLAT_THREADS": "4"})
    assert res.returncode == 0
    res = run_cli("census", "--m", "3/2", "--max-rank", "5",
                  env={"KUMMERLAT_THREADS": "zero"})
    assert res.returncode == 2
