import json

import pytest

import ordalg


def test_version():
    assert ordalg.__version__


def test_partitions():
    assert [ordalg.partition_count(n) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]
    assert ordalg.eqrel_join(4, [[0, 1], [2], [3]], [[1, 2], [0], [3]]) == [[0, 1, 2], [3]]
    assert ordalg.eqrel_meet(3, [[0, 1], [2]], [[0], [1, 2]]) == [[0], [1], [2]]
    with pytest.raises(ValueError):
        ordalg.eqrel_join(3, [[0, 1]], [[0], [1], [2]])


def test_poset_report():
    diamond = {
        "elements": ["0", "a", "b", "1"],
        "leq": [
            [True, True, True, True],
            [False, True, False, True],
            [False, False, True, True],
            [False, False, False, True],
        ],
    }
    r = ordalg.poset_report(diamond)
    assert r["algebraic"] is True and r["atomistic"] is True


def test_counterexample_and_caf():
    r = ordalg.verify_counterexample(2)
    assert r["passed"] is True
    assert ordalg.caf_iso_diagonal(3)["b_nodes"] == 5


def test_ordinals_and_topology():
    assert ordalg.cb_rank("w") == 2
    assert ordalg.cb_rank("w^2") == 3
    assert ordalg.cb_derivative("w^2*2+w*3") == "w*2+3"
    assert ordalg.cb_derivative("5") is None
    with pytest.raises(ordalg.OrdalgError):
        ordalg.cb_rank("w^12")
    sierpinski = json.dumps({"points": ["a", "b"], "opens": [[], [0], [0, 1]]})
    assert ordalg.topo_stages(sierpinski) == [0, 1]


def test_run_cli():
    code, out, _ = ordalg.run(["cb", "rank", "--ordinal", "w^3", "--json"])
    assert code == 0 and json.loads(out)["results"]["rank"] == 4
    assert ordalg.run(["accept", "never"])[0] == 2
    # repeated calls start from fresh option defaults
    code, out, _ = ordalg.run(["cantor", "verify", "--depth", "1"])
    code2, out2, _ = ordalg.run(["cantor", "verify"])
    assert code == 0 and code2 == 0 and out != out2
