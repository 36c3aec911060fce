"""
The r-distance graph of the hypercube
=====================================

Vertices of the n-cube are 0-1 strings; two are joined when they differ in
exactly r places.  Here we look at neighbourhoods, triangles, levels and the
shadow/cover maps that the upper bounds are built from.
"""

from trifree import (
    Params, covers, count_triangles_graph, format_vertex, hamming_distance,
    is_triangle, parse_vertex, r_neighbors, shadows, triangle_count_formula,
)

params = Params(6, 2)
v = parse_vertex("010110")

# every vertex has C(n, r) neighbours
nbrs = [format_vertex(u, 6) for u in r_neighbors(v, params)]
print(f"{len(nbrs)} neighbours of 010110 at distance 2:", " ".join(nbrs))

print("d(010110, 011001) =", hamming_distance(v, parse_vertex("011001")))

# a triangle needs all three pairwise distances equal to r
a, b, c = (parse_vertex(s) for s in ("110000", "101000", "011000"))
print("110000, 101000, 011000 form a triangle:", is_triangle(a, b, c, params))

# shadows drop ones, covers add them
print("shadows of 010110:", [format_vertex(u, 6) for u in shadows(v, 1)])
print("covers of 010110: ", [format_vertex(u, 6) for u in covers(v, 1, params)])

# the closed-form triangle count agrees with counting common neighbours
for n, r in [(3, 2), (6, 2), (7, 4), (8, 4)]:
    p = Params(n, r)
    print(f"n={n} r={r}: formula {triangle_count_formula(p)}, brute force {count_triangles_graph(p)}")
