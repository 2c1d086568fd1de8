import random
from fractions import Fraction

import pytest

from cliquecover import bounds
from cliquecover.bounds import (appendix_a_cubic, appendix_a_g, appendix_b_case_value, appendix_b_h, erdos_h,
                                k4_turan, k4_turan_identities, moon_moser_holds, proof_chain_check)
from cliquecover.generators import gnp, random_kfree
from cliquecover.graph import Graph, count_cliques, turan_graph


def test_erdos_examples():
    assert erdos_h(6, 5, 4) == 4 == count_cliques(turan_graph(6, 4), 4)
    assert erdos_h(12, 4, 3) == 64
    assert erdos_h(4, 5, 4) == 1
    with pytest.raises(ValueError):
        erdos_h(5, 3, 3)


def test_erdos_extremal_sanity():
    rng = random.Random(30)
    for _ in range(60):
        n = rng.randint(5, 30)
        G = random_kfree(n, 5, rng, fill=rng.random())
        assert count_cliques(G, 4) <= erdos_h(n, 5, 4)


def test_moon_moser_examples():
    res = moon_moser_holds(Graph.complete(4), 2)
    assert res.holds and res.slack == 0
    res = moon_moser_holds(turan_graph(9, 3), 2)
    assert res.holds and res.slack == 0
    with pytest.raises(ValueError):
        moon_moser_holds(Graph(4), 2)


def test_moon_moser_sampled_beyond_atlas():
    rng = random.Random(9)
    for _ in range(300):
        G = gnp(rng.choice((8, 9, 20)), rng.choice((0.3, 0.5, 0.7, 0.9)), rng)
        for t in (2, 3):
            try:
                assert moon_moser_holds(G, t).holds
            except ValueError:
                pass


def test_identity_examples():
    assert k4_turan(8) - k4_turan(7) == 8 == count_cliques(turan_graph(6, 3), 3)
    items = {it["name"]: it for it in k4_turan_identities(6)}
    assert items["eq1_lower"]["bound"] == 4 == items["eq1_lower"]["value"]
    assert all(it["status"] == "pass" for it in items.values())
    assert [it["name"] for it in k4_turan_identities(4)] == ["diff_identity"]


def test_appendix_a_values():
    assert appendix_a_g(6, 6) == 3 == appendix_a_cubic(6, 6)
    for c in range(6, 11):
        for n in range(c, c + 8):
            assert appendix_a_g(n, c) == appendix_a_cubic(n, c)
    with pytest.raises(ValueError):
        appendix_a_g(20, 5)


def test_appendix_b_values():
    assert appendix_b_h(8) == Fraction(156, 25)
    assert appendix_b_case_value(8) == Fraction(236, 25)
    report = bounds.check_appendix_b()
    assert report["status"] == "pass"
    assert any(it["status"] == "mismatch" for it in report["items"])


def test_chain_values():
    r97 = proof_chain_check(97)
    assert r97["status"] == "pass"
    assert r97["endpoints"]["max"] == 13406 and r97["endpoints"]["target"] == 13824
    r101 = proof_chain_check(101)
    assert r101["endpoints"]["max"] == 15099 and r101["endpoints"]["target"] == 15625
    r105 = proof_chain_check(105)
    assert r105["status"] == "pass" and all(e["designated"] for e in r105["equalities"])


@pytest.mark.parametrize("name", sorted(bounds.CHECKS))
def test_registered_checks_pass(name):
    assert bounds.CHECKS[name]()["status"] == "pass"
