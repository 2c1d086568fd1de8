"""
Greedy clique partitions
========================

Repeatedly remove a maximum clique (lexicographically first among ties).
The result satisfies a few structural facts which `verify_partition`
checks one by one.
"""

import random

from cliquecover.generators import random_kfree
from cliquecover.graph import Graph, turan_graph
from cliquecover.partition import CliquePartition, greedy_partition, verify_partition

for name, G in [("T(12,4)", turan_graph(12, 4)), ("C5", Graph.cycle(5))]:
    P = greedy_partition(G)
    print(f"{name}: parts {P.to_json()}  sizes {P.sizes}  valid={bool(verify_partition(P))}")

# a hand-made partition that is not greedy: K4 split into two edges
bad = CliquePartition(((0, 1), (2, 3)), Graph.complete(4))
report = verify_partition(bad)
print("\nK4 as two edges:", report.condition, "-", report.detail)

# a random K5-free graph: every part has at most four vertices
H = random_kfree(20, 5, random.Random(1))
P = greedy_partition(H)
print("\nrandom K5-free graph on 20 vertices, part sizes:", P.sizes)
