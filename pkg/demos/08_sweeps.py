"""
Conjecture sweeps
=================

Check CC_4(G) <= k_4(T(n,4)) over every labelled graph on six vertices, and
over random graphs on twenty vertices using the constructive bound.
"""

from cliquecover.sweep import cmd_sweep

r = cmd_sweep(6, 4, "exhaustive")
print(f"n=6: {r.instances} graphs, max CC4 {r.max_cover} (target {r.target}),"
      f" {len(r.witnesses)} witnesses, non-Turán witnesses: {len(r.counterexample_candidates)}")

r = cmd_sweep(5, 4, "exhaustive")
print(f"n=5: max CC4 {r.max_cover} (target {r.target}), {len(r.witnesses)} witnesses")

r = cmd_sweep(20, 4, "random", samples=300, seed=1)
print(f"n=20 random: max constructive cover {r.max_cover} of {r.target}"
      f" (ratio {r.max_ratio}), failures {len(r.failures)}")
