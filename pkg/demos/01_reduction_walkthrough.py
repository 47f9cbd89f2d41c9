# Deleting a vertex pair and reducing what is left.
from ikgraphs import SimpleGraph, reduce, count_equation, prop1_evaluate, catalog_lookup
from ikgraphs.reduction import format_report

k33 = SimpleGraph.complete_multipartite(3, 3)

# two vertices from the same side: every remaining vertex loses two neighbours
r = reduce(k33, 0, 1)
print(format_report(r, prop1_evaluate(r)))
# the count equation says -1 edges; the graph really collapses to nothing
print(count_equation(k33, 0, 1))

# an adjacent pair leaves a 4-cycle, which smooths away completely
print(reduce(k33, 0, 3).trace)

# Petersen, nonadjacent pair: a clean case where the prediction is exact
pet = catalog_lookup("Petersen").graph
r = reduce(pet, 0, 2)
print(r.predicted_edges, r.actual_edges, r.generic)

# the reduced multigraph keeps parallel edges, listed as "u v k"
from ikgraphs.reduction import multigraph_sidecar
print(multigraph_sidecar(r.reduced))
