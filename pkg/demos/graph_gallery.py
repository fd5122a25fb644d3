"""
A gallery of zero-divisor graphs
================================

Vertices are the nonzero zero divisors; two vertices are joined when
their product is zero.  Small rings already cover paths, stars,
complete and complete bipartite graphs.
"""

from zdalliance import build_graph, build_ring


def show(expr):
    g = build_graph(build_ring(expr))
    edges = sum(g.degree) // 2
    print(f"{g.ring_label}: {g.vertex_count} vertices, {edges} edges, "
          f"degrees {g.min_degree}..{g.max_degree}")
    return g


# Z8 and Z6 are paths on three vertices
show("Z8")
show("Z6")

# Z2 x F is a star: (1,0) annihilates every (0,y)
show("Z2 x Z7")

# two fields give a complete bipartite graph
show("Z3 x Z5")

# the multiples of p in Z_{p^2} pairwise multiply to zero
show("Z25")

# idealization of a field: complete graph on the module part
show("Id(Z5, 1)")

# exports
g = show("Z12")
print()
print(g.to_dot())
print(g.to_dimacs())
