import csv
import io
import json
import subprocess
import sys

import pytest

TREFOIL = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\n"


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "turaev_lab", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=300,
    )


@pytest.fixture
def trefoil_file(tmp_path):
    p = tmp_path / "trefoil.pd"
    p.write_text(TREFOIL)
    return str(p)


def test_jones_json(trefoil_file):
    res = run("jones", trefoil_file)
    assert res.returncode == 0, res.stderr
    out = json.loads(res.stdout)
    assert out["polynomial"] == "-t^4 + t^3 + t"
    assert (out["max_deg"], out["min_deg"], out["span"]) == ("4", "1", "3")
    assert (out["a_M"], out["a_m"]) == (-1, 1)


def test_output_is_deterministic(trefoil_file):
    assert run("kauffman2", trefoil_file).stdout == run("kauffman2", trefoil_file).stdout


def test_stdin_and_text_format():
    res = run("bracket", "-", "--format", "text", stdin=TREFOIL)
    assert res.returncode == 0
    assert "bracket: " in res.stdout
    assert "crossings: 3" in res.stdout


def test_orientation_flag():
    hopf = "X[1,3,2,4] X[3,1,4,2]"
    a = json.loads(run("jones", "-", stdin=hopf).stdout)
    b = json.loads(run("jones", "-", "--orient", "c2=-", stdin=hopf).stdout)
    assert a["writhe"] == 2 and b["writhe"] == -2
    assert a["polynomial"] != b["polynomial"]


def test_missing_file():
    res = run("jones", "missing-file.pd")
    assert res.returncode == 1
    err = json.loads(res.stderr)
    assert err["exit_code"] == 1 and "missing-file.pd" in err["message"]
    assert res.stdout == ""


def test_malformed_input():
    res = run("jones", "-", stdin="X[1,2,3]")
    assert res.returncode == 1
    assert json.loads(res.stderr)["error"] == "PDError"


def test_budget_exhaustion():
    res = run("jones", "--family", "3,3,5,3,3", "--budget-states", "10")
    assert res.returncode == 2
    assert json.loads(res.stderr)["error"] == "budget_exceeded"
    res = run("kauffman2", "--family", "2,2,3,2,2", "--budget-skein-nodes", "2")
    assert res.returncode == 2


def test_bad_family_params():
    res = run("jones", "--family", "1,2,3,4,5")
    assert res.returncode == 1


def test_genus_command(trefoil_file):
    out = json.loads(run("genus", trefoil_file).stdout)
    assert out["g_T_diagram"] == 0
    assert out["certified_link_genus"] == 0
    assert out["genus_two_certificate"]["reason"] == "diagram genus is 0, certificate inapplicable"


def test_genus_certificate_for_family():
    out = json.loads(run("genus", "--family", "2,2,4,-2,-2").stdout)
    assert out["g_T_diagram"] == 2
    assert out["genus_two_certificate"]["certified"] is True


def test_kauffman2_command(trefoil_file):
    out = json.loads(run("kauffman2", trefoil_file).stdout)
    assert out["z_degree"] == 2
    assert out["bounds_check"]["total_degree_ok"] and out["bounds_check"]["bridge_ok"]


def test_bracket_groups():
    out = json.loads(run("bracket", "--family", "2,2,4,2,2", "--groups").stdout)
    assert set(out["groups"]) == {"S1", "S2", "S3", "S4", "Sbar1", "Sbar2", "Sbar3", "Sbar_rest"}


def test_family_params_json():
    out = json.loads(run("family", "--params", "2,2,4,2,2").stdout)
    assert (out["c"], out["span"], out["gT"], out["delta"]) == (12, "8", 2, "2")


def test_family_grid_csv():
    res = run("family", "--grid", "strict", "--max-c", "17", "--format", "csv")
    assert res.returncode == 0
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert len(rows) == 7
    for row in rows:
        assert row["delta"] == row["s_plus_v_minus_2"]
        assert row["components"] == row["table_components"]


def test_family_custom_grid():
    res = run("family", "--grid", "r=2,s=2..3,t=2,u=2,v=2", "--format", "text")
    assert res.returncode == 0
    assert len(res.stdout.splitlines()) == 2
    assert run("family", "--grid", "r=2").returncode == 1
    assert run("family").returncode == 1


def test_moves_csv():
    res = run("moves", "--analyze", "RIII")
    rows = list(csv.DictReader(io.StringIO(res.stdout)))
    assert len(rows) == 5
    iv = [r for r in rows if r["case"] == "iv"][0]
    assert iv["closure"] == "a-f b-c d-e" and iv["delta_gT"] == "-1"


def test_reproduce_list_and_single_check():
    names = run("reproduce", "--list").stdout.split()
    assert len(names) == 13 and names[0] == "golden-jones"
    res = run("reproduce", "--check", "golden-jones")
    assert res.returncode == 0
    assert res.stdout.startswith("PASS golden-jones")


def test_reproduce_failed_check_exit_code():
    res = run("reproduce", "--check", "kauffman-z-degree", "--format", "json")
    out = json.loads(res.stdout)
    assert res.returncode == (0 if out[0]["passed"] else 3)


def test_reproduce_unknown_check():
    assert run("reproduce", "--check", "nope").returncode == 1
