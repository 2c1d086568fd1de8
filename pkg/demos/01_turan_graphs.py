"""
Turán graphs and clique counts
==============================

The balanced complete t-partite graph T(n, t) is the conjectured extremal
graph for clique covers.  This script builds a few of them and counts their
cliques two ways: by enumeration and by the floor-product formula.
"""

from cliquecover.bounds import erdos_h, turan_clique_count
from cliquecover.graph import count_cliques, is_turan, turan_graph, turan_parts

# T(8, 4) has four parts of size two
G = turan_graph(8, 4)
print("parts of T(8,4):", turan_parts(8, 4))
print("edges:", G.num_edges(), " K4s:", count_cliques(G, 4))

# k_4(T(n,4)) by enumeration against the closed formula
print("\n n  enumerated  formula")
for n in range(4, 17):
    print(f"{n:2d}  {count_cliques(turan_graph(n, 4), 4):10d}  {turan_clique_count(n, 4, 4):7d}")

# the Erdős bound: the most t-cliques any K_k-free graph on n vertices can have
print("\nmax triangles in a K4-free graph on 12 vertices:", erdos_h(12, 4, 3))

# deleting one edge breaks the Turán structure
print("T(8,4) minus an edge is Turán?", is_turan(G.without_edge(0, 1), 4))
