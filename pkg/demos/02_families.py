# Triangle-Y and Y-triangle moves, and the cousin families they generate.
from collections import Counter

from ikgraphs import SimpleGraph, are_isomorphic, catalog_lookup, family_closure, is_triangle_free, triangle_y, y_triangle
from ikgraphs.moves import delta_y_descendants

# K4 at a triangle is K2,3, and the move undoes at the new vertex
k4 = SimpleGraph.complete(4)
k23 = triangle_y(k4, (0, 1, 2))
print(are_isomorphic(k23, SimpleGraph.complete_multipartite(2, 3)), k23.degrees())
print(y_triangle(k23, 4) == k4)

k3311 = family_closure(catalog_lookup("K3311").graph)
e9e = family_closure(catalog_lookup("E9+e").graph)
print(len(k3311), len(e9e), len(set(k3311.order) | set(e9e.order)))

# how many degree-5 vertices the triangle-free members have
for fam in (k3311, e9e):
    tf = [g for g in fam.graphs() if is_triangle_free(g)]
    print(len(tf), Counter(g.degrees().count(5) for g in tf))

# the K7 family, and the part of it reachable by triangle-Y moves alone
k7 = catalog_lookup("K7").graph
print(len(family_closure(k7)), len(delta_y_descendants(k7)))
print(sorted(g.order for g in delta_y_descendants(k7).graphs()))
