# 2-apex certificates and intrinsic knotting certificates.
from ikgraphs import catalog_lookup, certify_ik, contract_edge, is_2_apex, SimpleGraph

pet = catalog_lookup("Petersen").graph
print(is_2_apex(pet))                       # one vertex already suffices
print(is_2_apex(SimpleGraph.complete(7)))   # every pair leaves K5

# U12 contains a K7 descendant after contracting its marked edge
u12 = catalog_lookup("U12")
h = contract_edge(u12.graph, u12.marked["e1"])
print(h.order, h.size)
w = certify_ik(u12.graph)
print(w.format())
print(w.verify(u12.graph))

# Cousin 29 is a member of the K3311 family, so it certifies itself
print(certify_ik(catalog_lookup("Cousin29").graph).pattern_name)
