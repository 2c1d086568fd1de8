"""Exact minimum t-clique cover by branch and bound over maximal cliques.

Any clique of a cover can be enlarged to a maximal clique without losing
coverage, so the candidate sets are exactly the maximal cliques.  The search
branches on the uncovered t-clique with the fewest candidates; a candidate
rejected in one branch stays excluded in the later sibling branches.  Pruning
uses a packing bound: t-cliques no two of which share an allowed candidate
each need their own cover member.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

from .certificate import CoverCertificate
from .graph import Clique, Graph, enumerate_cliques, maximal_cliques, to_mask

DEFAULT_NODE_LIMIT = 10**7
DEFAULT_CLIQUE_CAP = 5000


class BudgetExceeded(RuntimeError):
    """Search budget exhausted; ``best`` holds the best cover found so far."""

    def __init__(self, message: str, best: CoverCertificate | None = None):
        super().__init__(message)
        self.best = best


@dataclass
class SetCoverInstance:
    universe: list[Clique]
    candidates: list[Clique]
    covers: list[int]      # candidate -> bitmask over universe
    covered_by: list[int]  # universe element -> bitmask over candidates

    @classmethod
    def from_graph(cls, G: Graph, t: int) -> "SetCoverInstance":
        universe = enumerate_cliques(G, t)
        candidates = [c for c in maximal_cliques(G) if len(c) >= t]
        cmasks = [to_mask(c) for c in candidates]
        covers = [0] * len(candidates)
        covered_by = [0] * len(universe)
        for e, k in enumerate(universe):
            km = to_mask(k)
            for ci, cm in enumerate(cmasks):
                if km & cm == km:
                    covers[ci] |= 1 << e
                    covered_by[e] |= 1 << ci
        return cls(universe, candidates, covers, covered_by)


def _packing(covered_by: list[int], uncovered: int, banned: int = 0, order=None) -> int:
    # elements whose allowed candidate sets are pairwise disjoint, taken in
    # ``order`` (scarcest candidates first gives larger packings)
    blocked = 0
    size = 0
    for e in order if order is not None else range(len(covered_by)):
        if uncovered >> e & 1:
            allowed = covered_by[e] & ~banned
            if not allowed & blocked:
                blocked |= allowed
                size += 1
    return size


def cover_lower_bound(G: Graph, t: int) -> int:
    """Size of a greedy family of t-cliques pairwise lying in no common maximal clique."""
    inst = SetCoverInstance.from_graph(G, t)
    order = sorted(range(len(inst.universe)), key=lambda e: (inst.covered_by[e].bit_count(), e))
    return _packing(inst.covered_by, (1 << len(inst.universe)) - 1, 0, order)


def _greedy_cover(inst: SetCoverInstance) -> list[int]:
    uncovered = (1 << len(inst.universe)) - 1
    chosen = []
    while uncovered:
        ci = max(range(len(inst.candidates)), key=lambda i: ((inst.covers[i] & uncovered).bit_count(), -i))
        chosen.append(ci)
        uncovered &= ~inst.covers[ci]
    return chosen


def _certificate(G: Graph, t: int, inst: SetCoverInstance, chosen) -> CoverCertificate:
    return CoverCertificate.build(t, ((inst.candidates[i], "exact") for i in sorted(chosen)), n=G.n)


def exact_min_cover(G: Graph, t: int, node_limit: int | None = None,
                    clique_cap: int = DEFAULT_CLIQUE_CAP) -> tuple[int, CoverCertificate]:
    """Minimum number of cliques covering all ``t``-cliques, with a witness.

    ``node_limit`` defaults to the ``CCL_NODE_LIMIT`` environment variable or
    10**7.  Exceeding it, or having more than ``clique_cap`` t-cliques, raises
    :class:`BudgetExceeded`.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if node_limit is None:
        node_limit = int(os.environ.get("CCL_NODE_LIMIT", DEFAULT_NODE_LIMIT))
    inst = SetCoverInstance.from_graph(G, t)
    if len(inst.universe) > clique_cap:
        raise BudgetExceeded(f"{len(inst.universe)} {t}-cliques exceed the cap of {clique_cap}")
    if not inst.universe:
        return 0, CoverCertificate(t, (), (), G.n)

    covers, covered_by = inst.covers, inst.covered_by
    best = _greedy_cover(inst)
    nodes = 0
    scarce = sorted(range(len(inst.universe)), key=lambda e: (covered_by[e].bit_count(), e))

    def search(uncovered: int, chosen: list[int], banned: int) -> None:
        # banned: candidates already tried by an ancestor's earlier sibling
        nonlocal best, nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(f"node limit {node_limit} exceeded", _certificate(G, t, inst, best))
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        # fail-first: element with fewest allowed candidates, lowest index on ties
        pick, fewest = -1, None
        rest = uncovered
        while rest:
            low = rest & -rest
            rest ^= low
            e = low.bit_length() - 1
            k = (covered_by[e] & ~banned).bit_count()
            if fewest is None or k < fewest:
                pick, fewest = e, k
                if k <= 1:
                    break
        if fewest == 0:
            return
        if len(chosen) + _packing(covered_by, uncovered, banned, scarce) >= len(best):
            return
        opts = covered_by[pick] & ~banned
        order = []
        while opts:
            low = opts & -opts
            opts ^= low
            order.append(low.bit_length() - 1)
        order.sort(key=lambda ci: (-(covers[ci] & uncovered).bit_count(), ci))
        for ci in order:
            chosen.append(ci)
            search(uncovered & ~covers[ci], chosen, banned)
            chosen.pop()
            banned |= 1 << ci

    search((1 << len(inst.universe)) - 1, [], 0)
    return len(best), _certificate(G, t, inst, best)
