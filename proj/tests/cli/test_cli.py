import json
import os
import re
import subprocess
from pathlib import Path

import pytest

BIN = os.environ.get("ORDALG_BIN", "ordalg")
DATA = Path(__file__).parent / "data"


def run(*args):
    proc = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def report(*args):
    code, out, err = run(*args, "--json")
    return code, json.loads(out) if out.strip() else None


def test_cantor_verify_depth_3():
    code, r = report("cantor", "verify", "--depth", "3")
    assert code == 0
    joins = [c for c in r["results"]["checks"] if c["name"].startswith("join_full")]
    assert len(joins) == 3
    assert r["passed"] is True
    assert r["command"] == "cantor verify"
    assert set(r) == {"command", "inputs_digest", "results", "passed", "version", "wall_time_ms"}


def test_calg_lattice_dot_has_bell_3_nodes(tmp_path):
    dot = tmp_path / "out.dot"
    code, _, _ = run("calg", "lattice", "--input", DATA / "diag3.json", "--dot", dot)
    assert code == 0
    text = dot.read_text()
    assert text.startswith("digraph")
    nodes = re.findall(r"^\s*n?\d+\s*\[label=", text, flags=re.M)
    assert len(nodes) == 5


def test_bad_poset_exits_2():
    code, _, err = run("poset", "check", "--input", DATA / "bad_poset.json")
    assert code == 2
    assert err


def test_usage_errors_exit_2():
    assert run()[0] == 2
    assert run("nonsense")[0] == 2
    assert run("accept", "sometimes")[0] == 2
    assert run("cantor", "verify", "--depth", "zero")[0] == 2
    assert run("poset", "check", "--input", DATA / "missing.json")[0] == 2
    assert run("cb", "rank", "--ordinal", "w^^2")[0] == 2


def test_help_and_version():
    code, out, _ = run("--help")
    assert code == 0 and "poset" in out
    code, out, _ = run("--version")
    assert code == 0 and out.strip()


def test_reports_are_deterministic_apart_from_wall_time():
    a = report("calg", "caf-iso", DATA / "diag3.json")[1]
    b = report("calg", "caf-iso", DATA / "diag3.json")[1]
    a.pop("wall_time_ms")
    b.pop("wall_time_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    c = report("calg", "caf-iso", DATA / "diamond.json")
    assert c[0] == 2


def test_poset_round_trip(tmp_path):
    code, r = report("eqrel", "lattice", "--n", "3")
    assert code == 0 and len(r["results"]["elements"]) == 5
    path = tmp_path / "pi3.json"
    path.write_text(json.dumps(r["results"]))
    code, again = report("poset", "check", path)
    assert code == 0 and again["results"]["elements"] == 5
    code, rep = report("poset", "report", path)
    assert code == 0
    assert rep["results"]["algebraic"] is True


def test_eqrel_join_round_trip(tmp_path):
    code, r = report("eqrel", "join", DATA / "r.json", DATA / "s.json")
    assert code == 0
    assert r["results"] == {"n": 4, "classes": [[0, 1, 2], [3]]}
    path = tmp_path / "j.json"
    path.write_text(json.dumps(r["results"]))
    code, m = report("eqrel", "meet", path, DATA / "r.json")
    assert m["results"] == {"n": 4, "classes": [[0, 1], [2], [3]]}


def test_hasse_of_diamond(tmp_path):
    code, r = report("poset", "hasse", DATA / "diamond.json")
    assert code == 0 and len(r["results"]["covers"]) == 4


def test_omp_commands():
    code, r = report("omp", "validate", DATA / "mo2.json")
    assert code == 0 and r["results"]["valid"] is True
    code, r = report("omp", "validate", DATA / "mo2_broken.json")
    assert code == 1
    assert r["results"]["axiom"] == 1 and r["passed"] is False
    code, r = report("omp", "boolsub", DATA / "mo2.json")
    assert code == 0 and r["results"]["count"] == 3
    assert run("omp", "boolsub", DATA / "mo2.json", "--policy", "sloppy")[0] == 2


def test_calg_commands():
    code, r = report("calg", "atoms", DATA / "diag3.json")
    assert code == 0 and r["results"]["count"] == 3
    code, r = report("calg", "spectrum", DATA / "diag3.json")
    assert code == 0 and len(r["results"]["points"]) == 3
    code, r = report("calg", "generate", DATA / "diag3.json")
    assert code == 0 and r["results"]["dim"] == 3 and r["results"]["commutative"] is True


def test_cb_rank():
    code, r = report("cb", "rank", "--ordinal", "w^2*2+w*3+5")
    assert code == 0
    assert r["results"] == {"ordinal": "w^2*2+w*3+5", "rank": 3, "derivative": "w*2+3"}
    code, r = report("cb", "rank", "--ordinal", "7")
    assert r["results"]["rank"] == 1 and r["results"]["derivative"] is None


def test_topo_check_sierpinski():
    code, r = report("topo", "check", DATA / "sierpinski.json")
    assert code == 0
    res = r["results"]
    assert res["stages"] == {"a": 0, "b": 1}
    assert res["scattered"] and res["stonean"] and not res["hausdorff"]
    assert res["cb_rank"] == 2


def test_cantor_chain():
    code, r = report("cantor", "chain", "--n", "5")
    assert code == 0 and len(r["results"]["chain"]) == 5


@pytest.mark.parametrize("selector", ["fast"])
def test_accept_fast(selector):
    code, r = report("accept", selector)
    assert code == 0
    ids = [c["id"] for c in r["results"]["criteria"]]
    assert ids == [1, 2, 5, 7, 8, 9, 10]
