"""
Hypergraph refinement
=====================

Triples of 4-parts that induce T(12,4) form a 3-uniform hypergraph.  Two
savings apply: a triple that is not a hyperedge has a sparse pair of parts
(at most 11 cross edges), and four parts spanning a complete K4^(3) are
covered by their 24 transversal 4-cliques instead of 48 sets.
"""

import random

from cliquecover.cover import build_3cover, refinement_plan
from cliquecover.generators import perturbed_turan
from cliquecover.graph import turan_graph

H = turan_graph(16, 4)
base = build_3cover(H)
plan = refinement_plan(H, base)
print("T(16,4) hyperedges:", sorted(plan.hypergraph.edges))
print("K4^(3) family:", plan.k4_family, " transversal K4s:", len(plan.transversals[(1, 2, 3, 4)]))
print("size before:", base.certificate.size, " after:", plan.certificate.size)

# knock a few edges out of T(16,4): some triples stop being hyperedges
H = perturbed_turan(16, 4, 3, random.Random(5))
plan = refinement_plan(H, build_3cover(H))
print("\nperturbed T(16,4): hyperedges", sorted(plan.hypergraph.edges))
# plan keys are 0-based part indices; shift to match the hypergraph labels
for triple, (pair, used) in sorted(plan.sparse.items()):
    print(f"  sparse triple {tuple(i + 1 for i in triple)}: pair {tuple(i + 1 for i in pair)}, {used} sets")
