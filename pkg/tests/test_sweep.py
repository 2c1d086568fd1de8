import pytest

from cliquecover.graph import Graph, is_turan
from cliquecover.sweep import cmd_sweep


def test_n5_witnesses():
    r = cmd_sweep(5, 4, "exhaustive")
    assert r.instances == 1024 and r.target == 2 and r.max_cover == 2
    assert not r.failures
    assert r.witnesses and not r.counterexample_candidates


def test_n6_only_turan_attains():
    r = cmd_sweep(6, 4, "exhaustive")
    assert r.instances == 32768 and r.max_cover == 4 == r.target
    assert not r.failures and len(r.witnesses) == 45
    assert all(is_turan(Graph(6, w["edges"]), 4) for w in r.witnesses)


def test_random_sweep_is_deterministic():
    a = cmd_sweep(20, 4, "random", samples=200, seed=3).to_json()
    b = cmd_sweep(20, 4, "random", samples=200, seed=3).to_json()
    assert a == b
    assert not a["failures"] and a["instances"] == 200


def test_random_sweep_t3_k6_free():
    r = cmd_sweep(10, 3, "random", samples=60, seed=2, k6_free=True)
    assert not r.failures and r.max_cover <= r.target


def test_guards():
    with pytest.raises(ValueError):
        cmd_sweep(7, 4, "exhaustive")
    with pytest.raises(ValueError):
        cmd_sweep(10, 4, "random")
    with pytest.raises(ValueError):
        cmd_sweep(4, 5)
