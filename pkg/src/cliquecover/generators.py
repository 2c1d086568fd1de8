"""Seeded random graph generators used by sweeps and property tests."""
from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, bits, turan_graph

EDGE_PROBABILITIES = (0.3, 0.5, 0.7, 0.9)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _closes_clique(adj: list[int], u: int, v: int, k: int) -> bool:
    # would adding uv create a K_k, i.e. do u, v share a K_{k-2}?
    common = adj[u] & adj[v]
    need = k - 2
    if need <= 0:
        return True

    def has(cand: int, need: int) -> bool:
        if need == 0:
            return True
        while cand.bit_count() >= need:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            if has(cand & adj[w], need - 1):
                return True
        return False

    return has(common, need)


def random_kfree(n: int, k: int, rng: random.Random, fill: float = 1.0) -> Graph:
    """Random K_k-free graph: insert shuffled pairs unless they close a K_k.

    ``fill`` is the fraction of the shuffled pair list that is tried; 1.0 gives
    a maximal K_k-free graph.
    """
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    adj = [0] * n
    for u, v in pairs[: int(round(fill * len(pairs)))]:
        if not _closes_clique(adj, u, v, k):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph.from_adjacency(adj)


def perturbed_turan(n: int, t: int, removals: int, rng: random.Random) -> Graph:
    """Turán graph ``T(n, t)`` with ``removals`` random edges deleted."""
    T = turan_graph(n, t)
    edges = T.edges()
    rng.shuffle(edges)
    drop = set(edges[:removals])
    return Graph(n, [e for e in T.edges() if e not in drop])


def random_k5free_corpus(count: int, seed: int, max_n: int = 40) -> list[Graph]:
    """Mixed corpus of K5-free graphs with at most ``max_n`` vertices.

    Cycles through sparse G(n, p) graphs filtered to K5-free, partially and
    fully saturated K5-free graphs, and lightly perturbed 4-partite Turán
    graphs, so that greedy partitions with many 4-parts are well represented.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = len(out) % 4
        n = rng.randint(4, max_n)
        if kind == 0:
            g = gnp(n, rng.choice(EDGE_PROBABILITIES[:2]), rng)
            if _has_k(g, 5):
                g = random_kfree(n, 5, rng, fill=rng.random())
        elif kind == 1:
            g = random_kfree(n, 5, rng, fill=rng.uniform(0.3, 1.0))
        elif kind == 2:
            g = random_kfree(n, 5, rng)
        else:
            g = perturbed_turan(n, 4, rng.randint(0, max(1, n // 3)), rng)
        out.append(g)
    return out


def _has_k(g: Graph, k: int) -> bool:
    from .graph import count_cliques
    return count_cliques(g, k) > 0


def planted_clique(n: int, size: int, p: float, rng: random.Random) -> Graph:
    """G(n, p) with a clique planted on a random ``size``-subset."""
    base = gnp(n, p, rng)
    members = rng.sample(range(n), size)
    edges = set(base.edges()) | {tuple(sorted(e)) for e in combinations(members, 2)}
    return Graph(n, sorted(edges))


def edges_of_mask(n: int, mask: int) -> list[tuple[int, int]]:
    pairs = list(combinations(range(n), 2))
    return [pairs[i] for i in bits(mask)]
