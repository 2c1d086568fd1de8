"""Greedy sequences, their value function and the local adjustment operations.

A greedy sequence is the non-increasing list of part sizes of a greedy
partition of a K5-free graph.  Its value ``f = S1 + S2 + S3`` counts the
cliques used by the 3-clique cover construction in :mod:`cliquecover.cover`.
The three operations rewrite a sequence without decreasing ``f`` until it is
irreducible; the closed-form evaluators give ``f`` of irreducible sequences
and the resulting upper bounds as exact fractions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


@dataclass(frozen=True)
class GreedySequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        if not e:
            raise ValueError("a greedy sequence has at least one entry")
        if any(x not in (1, 2, 3, 4) for x in e):
            raise ValueError(f"entries must lie in 1..4: {e}")
        if any(e[i] < e[i + 1] for i in range(len(e) - 1)):
            raise ValueError(f"entries must be non-increasing: {e}")
        object.__setattr__(self, "entries", e)

    @property
    def m(self) -> int:
        return sum(self.entries)

    @property
    def p(self) -> int:
        return len(self.entries)

    @property
    def a(self) -> int:
        return self.entries.count(4)

    @property
    def b(self) -> int:
        return sum(1 for x in self.entries if x >= 3)

    @property
    def c(self) -> int:
        return sum(1 for x in self.entries if x >= 2)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def sequence_of(P) -> GreedySequence:
    """Part sizes of a clique partition, which must all be at most 4."""
    sizes = P.sizes
    if any(s > 4 for s in sizes):
        raise ValueError(f"partition has a part of size {max(sizes)}; host graph is not K5-free")
    return GreedySequence(sizes)


class FValue(NamedTuple):
    S1: int
    S2: int
    S3: int
    f: int


def value_f(A: GreedySequence) -> FValue:
    m, p, a, b, c = A.m, A.p, A.a, A.b, A.c
    x = (0,) + A.entries  # 1-based

    def low(k):
        # sum_{j=2}^{min(k, b)} (a_j - 1)(j - 1)
        return sum((x[j] - 1) * (j - 1) for j in range(2, min(k, b) + 1))

    def mid(lo, hi):
        # sum_{j=lo}^{hi} (a_j - 1) b
        return sum((x[j] - 1) * b for j in range(lo, hi + 1))

    S1 = b
    S2 = m * b + a * a - a * b - b * b + b * c - a - 3 * b
    S3 = sum(x[k] * low(k - 1) for k in range(3, b + 1))
    S3 += sum(x[k] * (low(b) + mid(b + 1, k - 1)) for k in range(b + 1, c + 1))
    S3 += (p - c) * (low(b) + mid(b + 1, c))
    return FValue(S1, S2, S3, S1 + S2 + S3)


def f(A: GreedySequence) -> int:
    return value_f(A).f


@dataclass(frozen=True)
class OperationStep:
    op: int
    i: int  # 1-based positions in the old sequence
    j: int
    before: GreedySequence
    after: GreedySequence
    f_before: int
    f_after: int

    @property
    def delta_f(self) -> int:
        return self.f_after - self.f_before


def _first(e, val):
    return e.index(val)


def _last(e, val):
    return len(e) - 1 - e[::-1].index(val)


def apply_operation(A: GreedySequence) -> OperationStep | None:
    """Apply the highest-priority applicable operation, or return ``None``.

    Operation 1: at least two 1s; merge the first and last 1 into a 2.
    Operation 2: exactly one 1 and some 2; the first 2 absorbs the 1.
    Operation 3: no 1 and at least two 2s; first 2 becomes 3, last becomes 1.
    """
    e = list(A.entries)
    ones, twos = e.count(1), e.count(2)
    if ones >= 2:
        op, i, j = 1, _first(e, 1), _last(e, 1)
        e[i] = 2
        del e[j]
    elif ones == 1 and twos >= 1:
        op, i, j = 2, _first(e, 2), _first(e, 1)
        e[i] = 3
        del e[j]
    elif ones == 0 and twos >= 2:
        op, i, j = 3, _first(e, 2), _last(e, 2)
        e[i], e[j] = 3, 1
    else:
        return None
    new = GreedySequence(tuple(sorted(e, reverse=True)))
    return OperationStep(op, i + 1, j + 1, A, new, f(A), f(new))


def claimed_delta(A: GreedySequence, op: int) -> dict[str, int]:
    """Closed-form change of the value under operation ``op`` applied to ``A``.

    Operation 1 yields ``dS1``, ``dS2``, ``dS3`` separately; operations 2 and 3
    only the total ``df``.
    """
    p, b, c = A.p, A.b, A.c
    if op == 1:
        d = {"dS1": 0, "dS2": b, "dS3": b * (p - c - 2)}
        d["df"] = sum(d.values())
        return d
    if op == 2:
        return {"df": c * (c - b)}
    if op == 3:
        return {"df": c * (c - b - 1)}
    raise ValueError(f"unknown operation {op}")


def classify_type(A: GreedySequence) -> int:
    """Type (1, 2 or 3) of an irreducible sequence."""
    e = A.entries
    if any(x < 3 for x in e[:-1]):
        raise ValueError(f"{e} is not irreducible")
    return {4: 1, 3: 1, 2: 2, 1: 3}[e[-1]]


@dataclass(frozen=True)
class ReductionTrace:
    initial: GreedySequence
    steps: tuple[OperationStep, ...]
    final: GreedySequence
    final_type: int

    @property
    def q(self) -> int:
        return self.final.p

    def to_json(self) -> dict:
        return {
            "steps": [{"op": s.op, "f_before": s.f_before, "f_after": s.f_after} for s in self.steps],
            "final": list(self.final.entries),
            "type": self.final_type,
        }


def reduce(A: GreedySequence) -> ReductionTrace:
    """Apply operations until irreducible.

    Terminates because every step strictly decreases (length, number of 2s)
    lexicographically: operations 1 and 2 shorten the sequence and operation 3
    keeps the length while removing two 2s.
    """
    steps = []
    cur = A
    while (step := apply_operation(cur)) is not None:
        steps.append(step)
        cur = step.after
    return ReductionTrace(A, tuple(steps), cur, classify_type(cur))


# -- closed forms ------------------------------------------------------------

def _fr(*xs):
    return [Fraction(x) for x in xs]


def adjustment_main(m, q) -> Fraction:
    m, q = _fr(m, q)
    return 28 * q**3 - Fraction(45, 2) * q**2 * m + 6 * q * m**2 - Fraction(1, 2) * m**3


def R_terms(m, q) -> tuple[Fraction, Fraction, Fraction]:
    m, q = _fr(m, q)
    r1 = Fraction(3, 2) * q * m - Fraction(1, 2) * m**2 - 3 * q + m
    r2 = -28 * q**2 + Fraction(33, 2) * q * m - Fraction(5, 2) * m**2 + 6 * q - 2 * m
    r3 = -56 * q**2 + Fraction(63, 2) * q * m - Fraction(9, 2) * m**2 + 34 * q - 10 * m - 6
    return r1, r2, r3


def type_four_count(kind: int, m: int, q: int) -> int:
    """Number of 4s in an irreducible ``(m, q)`` sequence of the given type."""
    return m - 3 * q + {1: 0, 2: 1, 3: 2}[kind]


def type_consistent(kind: int, m: int, q: int) -> bool:
    if q < 1 or kind not in (1, 2, 3):
        return False
    a = type_four_count(kind, m, q)
    if kind == 1:
        return 0 <= a <= q
    return 0 <= a <= q - 1


def closed_form_f(kind: int, m: int, q: int) -> Fraction:
    """Value of the irreducible ``(m, q)`` sequence of type ``kind``."""
    if not type_consistent(kind, m, q):
        raise ValueError(f"no type-{kind} sequence with m={m}, q={q}")
    return adjustment_main(m, q) + R_terms(m, q)[kind - 1]


def adjustment_bound(m, q) -> Fraction:
    return adjustment_main(m, q) + max(R_terms(m, q))


def key_main(m, q) -> Fraction:
    m, q = _fr(m, q)
    return Fraction(59, 2) * q**3 - 24 * q**2 * m + Fraction(13, 2) * q * m**2 - Fraction(5, 9) * m**3


def Q_terms(m, q) -> tuple[Fraction, Fraction, Fraction]:
    m, q = _fr(m, q)
    q1 = (Fraction(13, 2) * q**2 - Fraction(17, 6) * q * m + Fraction(2, 9) * m**2
          + Fraction(1, 3) * q - Fraction(1, 9) * m + Fraction(4, 9))
    q2 = (-23 * q**2 + Fraction(79, 6) * q * m - Fraction(35, 18) * m**2
          + Fraction(11, 2) * q - Fraction(11, 6) * m)
    q3 = (-Fraction(105, 2) * q**2 + Fraction(175, 6) * q * m - Fraction(37, 9) * m**2
          + Fraction(92, 3) * q - Fraction(80, 9) * m - Fraction(16, 3))
    return q1, q2, q3


def key_lemma_bound(m, q) -> Fraction:
    return key_main(m, q) + max(Q_terms(m, q))


def refinement_savings(a) -> Fraction:
    """Guaranteed saving over ``f`` from the hypergraph refinement with ``a`` 4-parts."""
    a = Fraction(a)
    return Fraction(2, 9) * (a - 1) ** 2 * (a - 2) - Fraction(1, 6) * a**2 * (a - 1)
