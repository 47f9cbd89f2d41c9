"""Independent reference implementations used only by the tests.

Each one is deliberately naive: permutations instead of canonical labelling,
edge lists instead of bitsets, and so on.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import combinations, permutations

from ikgraphs.graph import SimpleGraph


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def random_perm(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def brute_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    target = {frozenset(e) for e in h.edges}
    for perm in permutations(range(g.order)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in g.edges):
            return True
    return False


def brute_triangle_free(g: SimpleGraph) -> bool:
    for u, v in g.edges:
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            return False
    return True


def brute_graph6(n: int, edges) -> str:
    """Encoder written straight from the format description."""
    es = {frozenset(e) for e in edges}
    bits = [1 if frozenset((i, j)) in es else 0 for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    body = "".join(chr(int("".join(map(str, bits[k:k + 6])), 2) + 63) for k in range(0, len(bits), 6))
    return head + body


def brute_reduce(n: int, edges, a: int, b: int):
    """Edge-list reduction: returns (vertex count, sorted edge multiset) of the fixpoint."""
    verts = set(range(n)) - {a, b}
    es = [tuple(sorted(e)) for e in edges if a not in e and b not in e]

    def deg(v):
        return sum((x == v) + (y == v) for x, y in es)

    changed = True
    while changed:
        changed = False
        for v in sorted(verts):
            d = deg(v)
            if d <= 1:
                es = [e for e in es if v not in e]
                verts.discard(v)
                changed = True
                break
            if d == 2:
                inc = [e for e in es if v in e]
                if len(inc) == 1:  # lone loop
                    es.remove(inc[0])
                else:
                    for e in inc:
                        es.remove(e)
                    ends = [x if y == v else y for x, y in inc]
                    es.append(tuple(sorted(ends)))
                verts.discard(v)
                changed = True
                break
    return len(verts), sorted(es)


def multiset_degree_sequence(es) -> list[int]:
    c = Counter()
    for x, y in es:
        c[x] += 1
        c[y] += 1
    return sorted(c.values(), reverse=True)
