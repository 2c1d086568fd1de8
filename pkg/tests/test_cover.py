import random
from itertools import combinations

import pytest

from cliquecover.certificate import CoverCertificate, validate_cover
from cliquecover.cover import (build_3cover, build_4cover, build_cover, build_triple_hypergraph,
                               find_k4_triples, refine_3cover, refinement_plan)
from cliquecover.exact import cover_lower_bound, exact_min_cover
from cliquecover.generators import gnp, perturbed_turan, planted_clique, random_k5free_corpus
from cliquecover.graph import Graph, count_cliques, enumerate_cliques, turan_graph
from cliquecover.partition import greedy_partition
from cliquecover.sequence import value_f


def disjoint_union(*graphs):
    edges, off = [], 0
    for g in graphs:
        edges += [(u + off, v + off) for u, v in g.edges()]
        off += g.n
    return Graph(off, edges)


def test_3cover_examples():
    two = disjoint_union(Graph.complete(3), Graph.complete(3))
    cert, _, A, f = build_3cover(two)
    assert sorted(cert.cliques) == [(0, 1, 2), (3, 4, 5)] and f == 8 == value_f(A).f
    cert, _, _, f = build_3cover(Graph.complete(4))
    assert cert.cliques == ((0, 1, 2, 3),) and f == 1
    cert, _, _, f = build_3cover(turan_graph(12, 4))
    assert validate_cover(turan_graph(12, 4), cert) and cert.size <= f == 39
    with pytest.raises(ValueError):
        build_3cover(Graph.complete(5))


def test_3cover_counts_follow_value():
    for H in random_k5free_corpus(80, seed=11):
        base = build_3cover(H)
        v = value_f(base.sequence)
        assert len(base.c1) == v.S1
        assert len(base.c2) == v.S2
        assert sum(len(s) for s in base.c3.values()) <= v.S3
        assert validate_cover(H, base.certificate)


def test_hypergraph_examples():
    H = turan_graph(12, 4)
    HG = build_triple_hypergraph(H, greedy_partition(H))
    assert HG.a == 3 and HG.edges == {(1, 2, 3)} and find_k4_triples(HG) == []
    H = turan_graph(16, 4)
    HG = build_triple_hypergraph(H, greedy_partition(H))
    assert HG.a == 4 and len(HG.edges) == 4 and find_k4_triples(HG) == [(1, 2, 3, 4)]
    H = disjoint_union(Graph.complete(4), Graph.complete(4), Graph.complete(4))
    HG = build_triple_hypergraph(H, greedy_partition(H))
    assert HG.edges == set()


def test_refinement_on_turan_16():
    H = turan_graph(16, 4)
    base = build_3cover(H)
    plan = refinement_plan(H, base)
    assert plan.k4_family == [(1, 2, 3, 4)]
    assert len(plan.transversals[(1, 2, 3, 4)]) == 24
    assert all(len(plan.c3[t]) == 0 for t in combinations(range(4), 3))
    refined = refine_3cover(H, base)
    assert validate_cover(H, refined) and refined.size < base.certificate.size


def test_refinement_noop_on_turan_12():
    H = turan_graph(12, 4)
    base = build_3cover(H)
    plan = refinement_plan(H, base)
    assert plan.sparse == {} and plan.k4_family == []
    assert plan.certificate.size == base.certificate.size


def test_sparse_triples_cost_at_most_11():
    rng = random.Random(7)
    seen = 0
    for _ in range(40):
        H = perturbed_turan(rng.choice((12, 16, 20)), 4, rng.randint(1, 6), rng)
        plan = refinement_plan(H, build_3cover(H))
        for triple, (_, used) in plan.sparse.items():
            assert used <= 11
            seen += 1
    assert seen > 0


def test_refined_never_larger():
    for H in random_k5free_corpus(80, seed=12):
        base = build_3cover(H)
        refined = refine_3cover(H, base)
        assert validate_cover(H, refined) and refined.size <= base.certificate.size


def test_4cover_examples():
    cert = build_4cover(turan_graph(8, 4))
    assert cert.size == 16 and validate_cover(turan_graph(8, 4), cert)
    assert build_4cover(Graph.complete(6)).cliques == (tuple(range(6)),)
    assert build_4cover(Graph.cycle(5)).size == 0
    for n in range(4, 17):
        assert build_4cover(turan_graph(n, 4)).size == count_cliques(turan_graph(n, 4), 4)


def test_4cover_all_small_graphs():
    import networkx as nx

    for g in nx.graph_atlas_g()[1:]:
        G = Graph(g.number_of_nodes(), g.edges())
        cert = build_4cover(G)
        assert validate_cover(G, cert)
        size, _ = exact_min_cover(G, 4)
        assert cert.size >= size >= cover_lower_bound(G, 4)


def test_4cover_peel_and_extension_branches():
    rng = random.Random(21)
    tags = set()
    for _ in range(30):
        G = planted_clique(rng.randint(10, 18), rng.choice((5, 6, 7)), 0.5, rng)
        cert = build_4cover(G)
        assert validate_cover(G, cert)
        tags.update(cert.provenance)
    assert {"peel", "extension"} <= tags


def test_build_cover_dispatch():
    G = turan_graph(9, 4)
    assert build_cover(G, 4).size == count_cliques(G, 4)
    assert validate_cover(G, build_cover(G, 3))
    with pytest.raises(ValueError):
        build_cover(G, 5)


def test_validate_cover_examples():
    T8 = turan_graph(8, 4)
    assert validate_cover(T8, CoverCertificate.build(4, [(k, "exact") for k in enumerate_cliques(T8, 4)]))
    report = validate_cover(Graph.complete(5), CoverCertificate.build(4, [((0, 1, 2, 3), "exact")]))
    assert not report and report.reason == "uncovered clique" and report.witness == (0, 1, 2, 4)
    report = validate_cover(Graph.cycle(5), CoverCertificate.build(2, [((0, 2), "exact")]))
    assert report.reason == "not a clique"


def test_certificate_json_round_trip(tmp_path):
    G = turan_graph(12, 4)
    cert = build_4cover(G)
    data = cert.to_json()
    assert set(data) == {"t", "n", "cliques", "provenance", "size"} and data["size"] == 81
    path = tmp_path / "c.json"
    cert.save(path)
    again = CoverCertificate.load(path)
    assert again == cert and validate_cover(G, again)
    data["size"] = 3
    with pytest.raises(ValueError):
        CoverCertificate.from_json(data)


def test_random_4covers_validate():
    rng = random.Random(4)
    for _ in range(60):
        G = gnp(rng.randint(5, 16), rng.choice((0.5, 0.7, 0.9)), rng)
        assert validate_cover(G, build_4cover(G))
