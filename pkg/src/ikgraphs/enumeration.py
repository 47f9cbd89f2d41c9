"""Isomorph-free generation of graphs with a prescribed degree multiset.

Generation proceeds by *saturating* one vertex at a time.  A state is a
partial graph whose vertices are either closed (final degree reached, no
further edges) or open.  Expanding a state picks one open vertex and gives it
its remaining neighbours, drawn from the open vertices and from fresh
vertices of each still-available degree.  Fresh vertices of equal degree are
interchangeable, so only their counts are branched on.

The set of completions of a state depends only on its isomorphism class as a
graph coloured by (closed?, target degree), so each level is reduced to one
representative per coloured canonical form before expanding the next.  The
last level therefore holds every admissible graph exactly once.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from . import graph6
from .canon import canonical_form, canonical_labeling, canonical_relabel
from .graph import SimpleGraph, bits, degree_sequence, is_connected, is_triangle_free, popcount

__all__ = [
    "DegreeSpec",
    "TYPE_TAGS",
    "type_spec",
    "enumerate_graphs",
    "naive_enumerate",
    "write_type_file",
]


@dataclass(frozen=True)
class DegreeSpec:
    degrees: tuple[int, ...]
    triangle_free: bool = True
    connected: bool = True

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def order(self) -> int:
        return len(self.degrees)

    @property
    def size(self) -> int:
        return sum(self.degrees) // 2

    def satisfiable_by_counting(self) -> bool:
        if sum(self.degrees) % 2:
            return False
        return not self.degrees or (self.degrees[0] < self.order and self.degrees[-1] >= 0)

    def admits(self, g: SimpleGraph) -> bool:
        if degree_sequence(g) != self.degrees:
            return False
        if self.triangle_free and not is_triangle_free(g):
            return False
        if self.connected and not is_connected(g):
            return False
        return True


# (|V4|, |V3|) split of the non-degree-5 vertices
TYPE_TAGS = {"0-13": (0, 13), "3-9": (3, 9), "6-5": (6, 5), "9-1": (9, 1)}


def type_spec(tag: str) -> DegreeSpec:
    v4, v3 = TYPE_TAGS[tag]
    return DegreeSpec((5,) + (4,) * v4 + (3,) * v3)


def type_filename(tag: str) -> str:
    return "t" + tag.replace("-", "_") + ".g6"


# A state is (targets, closed, adj) with all three tuples in canonical order.
State = tuple


def _colored_canon(tgt, closed, adj) -> tuple[bytes, State]:
    n = len(tgt)
    nbrs = [[(u, 1) for u in bits(adj[v])] for v in range(n)]
    colors = [(closed[v], tgt[v]) for v in range(n)]
    perm, cert = canonical_labeling(nbrs, colors)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    new_adj = [0] * n
    for v in range(n):
        m = 0
        for u in bits(adj[v]):
            m |= 1 << pos[u]
        new_adj[pos[v]] = m
    key = repr(cert).encode()
    return key, (tuple(tgt[v] for v in perm), tuple(closed[v] for v in perm), tuple(new_adj))


def _count_vectors(total: int, caps: list[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    for k in range(min(total, caps[0]), -1, -1):
        for rest in _count_vectors(total - k, caps[1:]):
            yield (k,) + rest


class _Expander:
    def __init__(self, spec: DegreeSpec):
        self.spec = spec
        self.full = Counter(spec.degrees)
        self.classes = sorted(self.full, reverse=True)

    def pool(self, tgt) -> Counter:
        p = Counter(self.full)
        p.subtract(Counter(tgt))
        return p

    def feasible(self, tgt, closed, adj, pool) -> bool:
        fresh = sum(pool.values())
        fresh_degree = sum(d * k for d, k in pool.items())
        open_vs = [v for v in range(len(tgt)) if not closed[v]]
        deficit = 0
        for w in open_vs:
            d = tgt[w] - popcount(adj[w])
            deficit += d
            if d == 0:
                continue
            room = fresh
            for y in open_vs:
                if y == w or adj[w] >> y & 1 or popcount(adj[y]) >= tgt[y]:
                    continue
                if self.spec.triangle_free and adj[y] & adj[w]:
                    continue
                room += 1
            if d > room:
                return False
        if (deficit + fresh_degree) % 2:
            return False
        if self.spec.connected and fresh and not open_vs:
            return False
        return True

    def children(self, state: State) -> Iterator[State]:
        tgt, closed, adj = state
        pool = self.pool(tgt)
        open_vs = [v for v in range(len(tgt)) if not closed[v]]
        if not open_vs:
            if self.spec.connected or not sum(pool.values()):
                return
            # start a further component
            for d in self.classes:
                if pool[d]:
                    yield tgt + (d,), closed + (0,), adj + (0,)
            return
        u = max(open_vs, key=lambda v: (tgt[v] - popcount(adj[v]), -v))
        need = tgt[u] - popcount(adj[u])
        tf = self.spec.triangle_free
        cands = []
        for x in open_vs:
            if x == u or adj[u] >> x & 1 or popcount(adj[x]) >= tgt[x]:
                continue
            if tf and adj[x] & adj[u]:
                continue
            cands.append(x)
        caps = [pool[d] for d in self.classes]
        for k in range(min(need, len(cands)) + 1):
            for chosen in combinations(cands, k):
                if tf and any(adj[x] >> y & 1 for x, y in combinations(chosen, 2)):
                    continue
                for counts in _count_vectors(need - k, caps):
                    new_tgt = list(tgt)
                    new_adj = list(adj)
                    new_closed = list(closed)
                    for x in chosen:
                        new_adj[x] |= 1 << u
                        new_adj[u] |= 1 << x
                    for d, c in zip(self.classes, counts):
                        for _ in range(c):
                            w = len(new_tgt)
                            new_tgt.append(d)
                            new_closed.append(0)
                            new_adj.append(1 << u)
                            new_adj[u] |= 1 << w
                    new_closed[u] = 1
                    p2 = Counter(pool)
                    for d, c in zip(self.classes, counts):
                        p2[d] -= c
                    if self.feasible(new_tgt, new_closed, new_adj, p2):
                        yield tuple(new_tgt), tuple(new_closed), tuple(new_adj)

    def expand(self, states: list[State]) -> dict:
        out = {}
        for s in states:
            for c in self.children(s):
                key, canon = _colored_canon(*c)
                out.setdefault(key, canon)
        return out


def _expand_chunk(args):
    spec, states = args
    return _Expander(spec).expand(states)


def _is_complete(spec: DegreeSpec, state: State) -> bool:
    tgt, closed, adj = state
    return len(tgt) == spec.order and all(closed)


def enumerate_graphs(spec: DegreeSpec, jobs: int = 1, progress=None) -> list[SimpleGraph]:
    """Every graph admitted by ``spec``, once per isomorphism class, sorted by canonical form.

    ``jobs > 1`` splits each level's expansion across worker processes; the
    output does not depend on it.  ``progress(level, n_states)`` is called
    after every level when given.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if not spec.satisfiable_by_counting() or spec.order == 0:
        return []
    exp = _Expander(spec)
    root = spec.degrees[0]
    level = {b"root": ((root,), (0,), (0,))}
    finished = {}
    depth = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        while level:
            states = [level[k] for k in sorted(level)]
            for s in states:
                if _is_complete(spec, s):
                    finished.setdefault(s, None)
            states = [s for s in states if not _is_complete(spec, s)]
            if pool is None:
                nxt = exp.expand(states)
            else:
                chunks = [states[i::jobs * 4] for i in range(jobs * 4)]
                nxt = {}
                for part in pool.map(_expand_chunk, [(spec, c) for c in chunks if c]):
                    for k, v in part.items():
                        nxt.setdefault(k, v)
            depth += 1
            if progress is not None:
                progress(depth, len(nxt))
            level = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    graphs = {}
    for tgt, closed, adj in finished:
        g = SimpleGraph(len(tgt), adj)
        if not spec.admits(g):
            raise AssertionError("generator produced a graph outside the spec")
        graphs.setdefault(canonical_form(g), g)
    return [canonical_relabel(graphs[k]) for k in sorted(graphs)]


def naive_enumerate(spec: DegreeSpec) -> list[SimpleGraph]:
    """Brute-force oracle: every labelled graph with vertex ``i`` of degree
    ``spec.degrees[i]``, filtered and reduced to one per isomorphism class.
    """
    n = spec.order
    if n > 8:
        raise ValueError("naive_enumerate is limited to 8 vertices")
    if sum(spec.degrees) % 2:
        return []
    pairs = list(combinations(range(n), 2))
    target = spec.degrees
    found = {}
    deg = [0] * n

    # rows are filled in vertex order; vertex v must be complete once its row is done
    def rec(v, j, edges):
        if v == n:
            g = SimpleGraph.from_edges(n, edges)
            if spec.admits(g):
                found.setdefault(canonical_form(g), g)
            return
        if j == n:
            if deg[v] == target[v]:
                rec(v + 1, v + 2, edges)
            return
        # leave (v, j) out
        rec(v, j + 1, edges)
        if deg[v] < target[v] and deg[j] < target[j]:
            deg[v] += 1
            deg[j] += 1
            edges.append((v, j))
            rec(v, j + 1, edges)
            edges.pop()
            deg[v] -= 1
            deg[j] -= 1

    del pairs
    rec(0, 1, [])
    return [canonical_relabel(found[k]) for k in sorted(found)]


def write_type_file(directory: str, tag: str, graphs: list[SimpleGraph]) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, type_filename(tag))
    with open(path, "w") as fh:
        graph6.write_file(fh, graphs)
    return path
