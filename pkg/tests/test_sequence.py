from fractions import Fraction
from itertools import product

import pytest

from cliquecover.graph import Graph, turan_graph
from cliquecover.partition import CliquePartition, greedy_partition
from cliquecover.sequence import (GreedySequence, Q_terms, R_terms, adjustment_bound, apply_operation,
                                  claimed_delta, closed_form_f, key_lemma_bound, reduce, sequence_of,
                                  type_consistent, value_f)
from oracles import greedy_sequences


def naive_f(entries):
    """Direct transcription of the triple sum, with explicit loops and 1-based indices."""
    x = (None,) + tuple(entries)
    p = len(entries)
    m = sum(entries)
    a = sum(1 for e in entries if e == 4)
    b = sum(1 for e in entries if e >= 3)
    c = sum(1 for e in entries if e >= 2)
    S1 = b
    S2 = m * b + a * a - a * b - b * b + b * c - a - 3 * b
    S3 = 0
    for k in range(3, b + 1):
        S3 += x[k] * sum((x[j] - 1) * (j - 1) for j in range(2, k))
    for k in range(b + 1, c + 1):
        S3 += x[k] * (sum((x[j] - 1) * (j - 1) for j in range(2, b + 1))
                      + sum((x[j] - 1) * b for j in range(b + 1, k)))
    for k in range(c + 1, p + 1):
        S3 += sum((x[j] - 1) * (j - 1) for j in range(2, b + 1)) + sum((x[j] - 1) * b for j in range(b + 1, c + 1))
    return S1, S2, S3, S1 + S2 + S3


@pytest.mark.parametrize("entries,expected", [
    ((3,), (1, 0, 0, 1)),
    ((4, 3), (2, 6, 0, 8)),
    ((4, 4, 3), (3, 20, 9, 32)),
    ((3, 2, 2), (1, 6, 2, 9)),
])
def test_value_examples(entries, expected):
    assert tuple(value_f(GreedySequence(entries))) == expected


def test_value_matches_naive_sum():
    for m in range(1, 16):
        for e in greedy_sequences(m):
            assert tuple(value_f(GreedySequence(e))) == naive_f(e)


def test_sequence_validation():
    for bad in [(), (5,), (2, 3), (0,)]:
        with pytest.raises(ValueError):
            GreedySequence(bad)
    A = GreedySequence((3, 2, 2))
    assert (A.m, A.p, A.a, A.b, A.c) == (7, 3, 0, 1, 3)


def test_sequence_of_partition():
    A = sequence_of(greedy_partition(turan_graph(12, 4)))
    assert A.entries == (4, 4, 4) and A.m == 12 and A.a == A.b == A.c == 3
    with pytest.raises(ValueError):
        sequence_of(greedy_partition(Graph.complete(5)))
    G = Graph(7, [(0, 1), (0, 2), (1, 2), (3, 4), (5, 6)])
    assert sequence_of(CliquePartition(((0, 1, 2), (3, 4), (5, 6)), G)).entries == (3, 2, 2)


@pytest.mark.parametrize("entries,op,after,df", [
    ((3, 2, 1), 2, (3, 3), 2),
    ((3, 2, 2), 3, (3, 3, 1), 3),
    ((2, 1, 1), 1, (2, 2), 0),
])
def test_operation_examples(entries, op, after, df):
    step = apply_operation(GreedySequence(entries))
    assert (step.op, step.after.entries, step.delta_f) == (op, after, df)


def test_irreducible_and_traces():
    assert apply_operation(GreedySequence((4, 3))) is None
    tr = reduce(GreedySequence((4, 3)))
    assert tr.steps == () and tr.final_type == 1
    tr = reduce(GreedySequence((3, 2, 1)))
    assert [s.op for s in tr.steps] == [2] and tr.final.entries == (3, 3) and tr.final_type == 1
    tr = reduce(GreedySequence((2, 2, 2, 1, 1)))
    assert tr.q < 5
    fs = [tr.steps[0].f_before] + [s.f_after for s in tr.steps]
    assert fs == sorted(fs)
    assert [naive_f(s.after.entries)[3] for s in tr.steps] == fs[1:]
    assert reduce(GreedySequence((3, 2, 2))).to_json() == {
        "steps": [{"op": 3, "f_before": 9, "f_after": 12}], "final": [3, 3, 1], "type": 3}


def test_calculus_exhaustive():
    for m in range(1, 19):
        for e in greedy_sequences(m):
            A = GreedySequence(e)
            cur = A
            while (step := apply_operation(cur)) is not None:
                claim = claimed_delta(cur, step.op)
                assert step.delta_f == claim["df"] >= 0
                if step.op == 1:
                    old, new = value_f(cur), value_f(step.after)
                    assert (new.S1 - old.S1, new.S2 - old.S2, new.S3 - old.S3) == (
                        claim["dS1"], claim["dS2"], claim["dS3"])
                assert step.after.entries.count(4) == cur.entries.count(4)
                cur = step.after
            tr = reduce(A)
            assert tr.final == cur
            q = tr.q
            assert Fraction(m, 4) <= q <= A.p
            assert closed_form_f(tr.final_type, m, q) == value_f(cur).f
            if tr.final_type == 1:
                assert cur.entries.count(4) == m - 3 * q and cur.entries.count(3) == 4 * q - m
            assert adjustment_bound(m, q) >= value_f(A).f


@pytest.mark.parametrize("kind,m,q,expected,entries", [
    (1, 7, 2, 8, (4, 3)),
    (2, 9, 3, 18, (4, 3, 2)),
    (3, 8, 3, 12, (4, 3, 1)),
])
def test_closed_form_examples(kind, m, q, expected, entries):
    assert closed_form_f(kind, m, q) == expected == value_f(GreedySequence(entries)).f


def test_closed_form_rejects_inconsistent():
    with pytest.raises(ValueError):
        closed_form_f(1, 12, 2)
    assert not type_consistent(2, 12, 3)


def test_bound_values():
    assert adjustment_bound(7, 2) == 8
    assert max(R_terms(7, 2)) == R_terms(7, 2)[0] == Fraction(-5, 2)
    assert adjustment_bound(4, 1) >= 1
    assert key_lemma_bound(12, 3) == Fraction(370, 9)
    assert Q_terms(12, 3) == (Fraction(-205, 18), Fraction(-37, 2), Fraction(-69, 2))
    assert key_lemma_bound(12, 3) >= value_f(GreedySequence((4, 4, 4))).f == 39


def test_adjustment_bound_dominates_each_type():
    for m, q in product(range(1, 40), range(1, 15)):
        for kind in (1, 2, 3):
            if type_consistent(kind, m, q):
                assert adjustment_bound(m, q) >= closed_form_f(kind, m, q)
