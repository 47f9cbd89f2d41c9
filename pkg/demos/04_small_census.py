# Enumerating a degree type and filtering it down.
# The (9,1) type is tiny; (6,5) takes about twenty seconds on one core.
from ikgraphs import type_spec, enumerate_graphs, is_2_apex, graph6_encode

graphs = enumerate_graphs(type_spec("9-1"))
print(len(graphs))
for g in graphs:
    print(graph6_encode(g), is_2_apex(g).pair)

graphs = enumerate_graphs(type_spec("6-5"))
left = [g for g in graphs if is_2_apex(g) is None]
print(len(graphs), len(left))
for g in left:
    print(graph6_encode(g))
