"""
Global defensive k-alliance numbers
===================================

A set S is a defensive k-alliance when every member has at least
(deg(x) + k) / 2 of its neighbors inside S; global adds domination.
The solver returns the exact minimum size for each k, and for small
graphs a brute-force oracle confirms it.
"""

from zdalliance import (AllianceProblem, build_graph, build_ring,
                        domination_number, oracle_solve, solve, spectrum)

g = build_graph(build_ring("Z12"))

size, witness = domination_number(g)
print(f"domination number of {g.ring_label}: {size}, "
      f"e.g. {{{', '.join(g.labels_of(witness))}}}")

# one value, with the optimal set
sol = solve(AllianceProblem(g, -1))
print(f"gamma_-1 = {sol.size}, witness {{{', '.join(g.labels_of(sol.witness))}}}, "
      f"{sol.nodes} nodes")

# the whole spectrum; k beyond the minimum degree is infeasible
print("\nk      gamma_k^d")
for k, s in sorted(spectrum(g).items()):
    print(f"{k:>3}    {s.size if s.feasible else 'infeasible'}")

# brute force agrees
ref = oracle_solve(AllianceProblem(g, -1))
print(f"\noracle on the same instance: {ref.size} "
      f"({ref.nodes} subsets examined)")

# a bigger instance stays fast thanks to the pruning
big = build_graph(build_ring("Z2 x Z27"))
sol = solve(AllianceProblem(big, 1))
print(f"\n{big.ring_label} ({big.vertex_count} vertices): "
      f"gamma_1 = {sol.size} in {sol.nodes} nodes")
