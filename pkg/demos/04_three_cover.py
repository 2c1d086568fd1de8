"""
Explicit 3-clique covers of K5-free graphs
==========================================

`build_3cover` assembles three families of cliques from the greedy
partition and validates the result.  The family sizes follow the value
accounting: |C1| = S1, |C2| = S2 and |C3| <= S3.
"""

import random

from cliquecover.certificate import validate_cover
from cliquecover.cover import build_3cover
from cliquecover.generators import random_kfree
from cliquecover.graph import turan_graph
from cliquecover.sequence import value_f

for label, H in [("T(12,4)", turan_graph(12, 4)), ("random", random_kfree(24, 5, random.Random(3)))]:
    base = build_3cover(H)
    v = value_f(base.sequence)
    c3 = sum(len(s) for s in base.c3.values())
    print(f"{label}: sequence {base.sequence.entries}")
    print(f"  |C1|={len(base.c1)} (S1={v.S1})  |C2|={len(base.c2)} (S2={v.S2})  |C3|={c3} (S3={v.S3})")
    print(f"  certificate size {base.certificate.size} <= f = {base.f}:"
          f" {base.certificate.size <= base.f}, valid: {bool(validate_cover(H, base.certificate))}")
