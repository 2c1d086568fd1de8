"""
The greedy-sequence value and its reduction
===========================================

A K5-free graph's greedy partition gives a sequence of part sizes in
{1, 2, 3, 4}.  Its value f bounds the size of a 3-clique cover.  Three
operations push the sequence towards an irreducible form without lowering f,
and the irreducible forms have closed-form values.
"""

from cliquecover.sequence import (GreedySequence, apply_operation, claimed_delta, closed_form_f,
                                  key_lemma_bound, reduce, value_f)

for entries in [(3,), (4, 3), (4, 4, 3), (3, 2, 2)]:
    print(entries, value_f(GreedySequence(entries)))

# one step of each operation, with the closed-form increment alongside
for entries in [(2, 1, 1), (3, 2, 1), (3, 2, 2)]:
    A = GreedySequence(entries)
    step = apply_operation(A)
    print(f"\n{entries} --op {step.op}--> {step.after.entries}"
          f"  df={step.delta_f}  claimed={claimed_delta(A, step.op)['df']}")

# a full reduction
trace = reduce(GreedySequence((4, 3, 2, 2, 2, 1, 1)))
print("\ntrace:", trace.to_json())
m, q = trace.initial.m, trace.q
print(f"closed form for type {trace.final_type}, m={m}, q={q}:", closed_form_f(trace.final_type, m, q))
print("key-lemma bound at (12, 3):", key_lemma_bound(12, 3), "=", float(key_lemma_bound(12, 3)))
