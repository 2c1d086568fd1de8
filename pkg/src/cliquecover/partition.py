"""Greedy partitions of a graph into vertex-disjoint cliques.

A greedy partition repeatedly removes a maximum clique of whatever is left.
Ties are broken by taking the lexicographically smallest maximum clique, so
the partition of a given graph is unique.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Clique, Graph, bits, clique_number, max_clique_mask, to_mask, to_tuple


@dataclass(frozen=True)
class CliquePartition:
    parts: tuple[Clique, ...]
    host: Graph = field(repr=False, compare=False)

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        for p in parts:
            if not p:
                raise ValueError("empty part")
            if p[0] < 0 or p[-1] >= self.host.n:
                raise ValueError(f"part {p} has vertices outside the host graph")
        object.__setattr__(self, "parts", parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def masks(self) -> list[int]:
        return [to_mask(p) for p in self.parts]

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


def greedy_partition(H: Graph) -> CliquePartition:
    """Greedy clique partition of ``H`` with lexicographic tie-breaking."""
    left = H.full_mask
    parts = []
    while left:
        c = max_clique_mask(H, left)
        parts.append(to_tuple(c))
        left &= ~c
    return CliquePartition(tuple(parts), H)


@dataclass(frozen=True)
class PartitionReport:
    ok: bool
    condition: str | None = None
    detail: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_partition(P: CliquePartition) -> PartitionReport:
    """Check every greedy-partition property, stopping at the first failure.

    Conditions, in checking order: ``disjoint``, ``covers``, ``clique``,
    ``non_increasing``, ``maximum_residual_clique``, ``non_neighbor``
    (each vertex of a later part misses some vertex of every earlier part) and
    ``size_bound`` (number of parts at most ``n - min degree``).
    """
    H = P.host
    masks = P.masks()
    seen = 0
    for i, m in enumerate(masks):
        if seen & m:
            return PartitionReport(False, "disjoint", f"part {i} overlaps an earlier part",
                                   (i, to_tuple(seen & m)))
        seen |= m
    if seen != H.full_mask:
        missing = to_tuple(H.full_mask & ~seen)
        return PartitionReport(False, "covers", "vertices missing from the partition", missing)
    for i, p in enumerate(P.parts):
        if not H.is_clique(p):
            return PartitionReport(False, "clique", f"part {i} is not a clique", (i, p))
    sizes = P.sizes
    for i in range(len(sizes) - 1):
        if sizes[i] < sizes[i + 1]:
            return PartitionReport(False, "non_increasing", f"|A_{i + 1}| < |A_{i + 2}|", (i, i + 1))
    left = H.full_mask
    for i, m in enumerate(masks):
        omega = clique_number(H, left)
        if m.bit_count() != omega:
            return PartitionReport(False, "maximum_residual_clique",
                                   f"part {i} has size {m.bit_count()} but the residual graph has "
                                   f"clique number {omega}", (i, omega))
        left &= ~m
    for j in range(len(masks)):
        for i in range(j):
            for v in bits(masks[j]):
                if masks[i] & ~H.adj(v) == 0:
                    return PartitionReport(False, "non_neighbor",
                                           f"vertex {v} of part {j} sees all of part {i}", (i, j, v))
    bound = H.n - H.min_degree()
    if len(masks) > bound:
        return PartitionReport(False, "size_bound", f"p={len(masks)} exceeds n - delta = {bound}",
                               (len(masks), bound))
    return PartitionReport(True)
