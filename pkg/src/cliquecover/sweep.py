"""Conjecture sweeps: compare clique cover numbers against the Turán value."""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations

from .bounds import jsonable, turan_clique_count
from .cover import build_3cover, build_4cover, refine_3cover
from .exact import BudgetExceeded, exact_min_cover
from .generators import EDGE_PROBABILITIES, gnp
from .graph import Graph, count_cliques, is_turan

EXHAUSTIVE_MAX_N = 6


@dataclass
class SweepReport:
    n: int
    t: int
    mode: str
    target: int
    instances: int = 0
    exact_solves: int = 0
    max_cover: int = 0
    max_ratio: Fraction = Fraction(0)
    witnesses: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    unresolved: list[dict] = field(default_factory=list)
    seed: int | None = None
    samples: int | None = None

    @property
    def counterexample_candidates(self) -> list[dict]:
        return [w for w in self.witnesses if not w["is_turan"]]

    def to_json(self) -> dict:
        d = asdict(self)
        d["max_ratio"] = jsonable(self.max_ratio)
        d["witness_count"] = len(self.witnesses)
        d["all_witnesses_turan"] = not self.counterexample_candidates
        return d


def _record(report: SweepReport, G: Graph, size: int, instance: int) -> None:
    report.max_cover = max(report.max_cover, size)
    if report.target:
        report.max_ratio = max(report.max_ratio, Fraction(size, report.target))
    entry = {"instance": instance, "size": size, "edges": [list(e) for e in G.edges()],
             "is_turan": is_turan(G, report.t)}
    if size > report.target:
        report.failures.append(entry)
    elif size == report.target and report.target > 0:
        report.witnesses.append(entry)


def cmd_sweep(n: int, t: int, mode: str = "exhaustive", samples: int = 100, seed: int | None = None,
              k6_free: bool = False, node_limit: int | None = None) -> SweepReport:
    """Check ``CC_t(G) <= k_t(T(n, t))`` over a family of ``n``-vertex graphs.

    ``exhaustive`` visits every labelled graph (edge subsets in bitmask order)
    and solves each exactly; it is refused above ``n = 6``.  ``random`` draws
    G(n, p) graphs with ``p`` picked per instance from 0.3/0.5/0.7/0.9, computes
    a constructive cover, and solves exactly only when the constructive size
    reaches the target.
    """
    if not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    target = turan_clique_count(n, t, t)
    if mode == "exhaustive":
        if n > EXHAUSTIVE_MAX_N:
            raise ValueError(f"exhaustive mode is limited to n <= {EXHAUSTIVE_MAX_N}")
        report = SweepReport(n, t, mode, target)
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            report.instances += 1
            if count_cliques(G, t) == 0:
                continue
            size, _ = exact_min_cover(G, t, node_limit=node_limit)
            report.exact_solves += 1
            _record(report, G, size, mask)
        return report
    if mode != "random":
        raise ValueError(f"unknown mode {mode!r}")
    if seed is None:
        raise ValueError("random mode requires a seed")
    rng = random.Random(seed)
    report = SweepReport(n, t, mode, target, seed=seed, samples=samples)
    for instance in range(samples):
        while True:
            G = gnp(n, rng.choice(EDGE_PROBABILITIES), rng)
            if not k6_free or count_cliques(G, 6) == 0:
                break
        report.instances += 1
        upper = _constructive_size(G, t)
        if upper is not None and upper < target:
            report.max_cover = max(report.max_cover, upper)
            if target:
                report.max_ratio = max(report.max_ratio, Fraction(upper, target))
            continue
        try:
            size, _ = exact_min_cover(G, t, node_limit=node_limit)
        except BudgetExceeded as exc:
            best = exc.best.size if exc.best is not None else upper
            report.unresolved.append({"instance": instance, "upper": best, "edges": [list(e) for e in G.edges()]})
            continue
        report.exact_solves += 1
        _record(report, G, size, instance)
    return report


def _constructive_size(G: Graph, t: int) -> int | None:
    if t == 4:
        return build_4cover(G).size
    if t == 3 and count_cliques(G, 5) == 0:
        return refine_3cover(G, build_3cover(G)).size
    return None
