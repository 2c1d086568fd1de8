"""
Exact checks of the counting bounds
===================================

Every inequality here is checked in exact rational arithmetic over integer
ranges.  Each check returns a JSON-ready report with a pass/fail status.
"""

from cliquecover import bounds
from cliquecover.graph import Graph, turan_graph

print("Moon-Moser slack, K4 with t=2:", bounds.moon_moser_holds(Graph.complete(4), 2).slack)
print("Moon-Moser slack, T(9,3) with t=2:", bounds.moon_moser_holds(turan_graph(9, 3), 2).slack)

for item in bounds.k4_turan_identities(8):
    print(" ", item)

print("\ng(6,6) =", bounds.appendix_a_g(6, 6))
print("h(8) direct =", bounds.appendix_b_h(8), " case cubic =", bounds.appendix_b_case_value(8))

for n in (97, 101):
    ends = bounds.proof_chain_check(n)["endpoints"]
    print(f"n={n}: endpoint max {ends['max']} < {ends['target']}")

for name, check in bounds.CHECKS.items():
    report = check()
    print(f"{name:10s} {report['status']:5s} {report['counts']}")
