"""Minor containment with explicit branch-set witnesses.

``has_minor`` explores contractions of the host: H is a minor of G exactly
when H is a subgraph of some contraction of G.  Each search node is the
quotient of the host by a partition into connected branch sets; nodes whose
quotient is already known to fail are skipped by canonical form.  When the
pattern has minimum degree 3, vertices of degree <= 1 are dropped and degree-2
vertices merged into a neighbour before branching, which never destroys a
model of such a pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import canonical_form, canonical_labeling, _weighted
from .graph import SimpleGraph, bits, popcount

__all__ = ["MinorWitness", "has_minor", "contract_edge", "find_isomorphism", "monomorphism"]


@dataclass(frozen=True)
class MinorWitness:
    """A model of ``pattern`` in a host graph.

    ``branch_sets[p]`` is the host vertex set contracted onto pattern vertex
    ``p``; ``edge_assignment`` maps each pattern edge to a host edge joining the
    two branch sets.
    """

    pattern_name: str
    pattern: SimpleGraph
    branch_sets: tuple
    edge_assignment: dict

    def verify(self, host: SimpleGraph) -> bool:
        used = set()
        for bs in self.branch_sets:
            if not bs or used & bs or any(not 0 <= v < host.order for v in bs):
                return False
            used |= bs
            if not _connected_set(host, bs):
                return False
        for p, q in self.pattern.edges:
            e = self.edge_assignment.get((p, q))
            if e is None or not host.has_edge(*e):
                return False
            u, v = e
            if not ((u in self.branch_sets[p] and v in self.branch_sets[q]) or
                    (v in self.branch_sets[p] and u in self.branch_sets[q])):
                return False
        return True

    def format(self) -> str:
        lines = [f"pattern: {self.pattern_name}"]
        for p, bs in enumerate(self.branch_sets):
            lines.append(f"branch {p}: {' '.join(map(str, sorted(bs)))}")
        return "\n".join(lines) + "\n"

    def compact(self) -> str:
        """Single-line form: ``name|set;set;...`` with sets as space-free comma lists."""
        sets = ";".join(",".join(map(str, sorted(bs))) for bs in self.branch_sets)
        return f"{self.pattern_name}|{sets}"


def _connected_set(g: SimpleGraph, vs) -> bool:
    vs = set(vs)
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in bits(g.adj[v]):
            if u in vs and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vs


def _assign_edges(host: SimpleGraph, pattern: SimpleGraph, sets) -> Optional[dict]:
    out = {}
    for p, q in pattern.edges:
        hit = None
        for u in sorted(sets[p]):
            nb = host.adj[u]
            for v in sorted(sets[q]):
                if nb >> v & 1:
                    hit = (u, v) if u < v else (v, u)
                    break
            if hit:
                break
        if hit is None:
            return None
        out[(p, q)] = hit
    return out


def witness_from_sets(host: SimpleGraph, pattern: SimpleGraph, name: str, sets) -> Optional[MinorWitness]:
    sets = tuple(frozenset(s) for s in sets)
    edges = _assign_edges(host, pattern, sets)
    if edges is None:
        return None
    w = MinorWitness(name, pattern, sets, edges)
    return w if w.verify(host) else None


def contract_edge(g: SimpleGraph, e: tuple[int, int]) -> SimpleGraph:
    """Merge the endpoints of ``e`` into the smaller label; drop loops and parallel edges."""
    u, v = sorted(e)
    if not g.has_edge(u, v):
        raise ValueError(f"{e} is not an edge")
    shift = lambda x: u if x == v else x - (x > v)
    edges = {tuple(sorted((shift(x), shift(y)))) for x, y in g.edges}
    edges.discard((u, u))
    return SimpleGraph.from_edges(g.order - 1, sorted(edges))


def find_isomorphism(g: SimpleGraph, h: SimpleGraph) -> Optional[list[int]]:
    """``phi`` with ``phi[v]`` the vertex of ``h`` matched to vertex ``v`` of ``g``."""
    if g.order != h.order or g.size != h.size:
        return None
    pg, cg = canonical_labeling(_weighted(g))
    ph, ch = canonical_labeling(_weighted(h))
    if cg != ch:
        return None
    phi = [0] * g.order
    for i in range(g.order):
        phi[pg[i]] = ph[i]
    return phi


def monomorphism(pattern_adj: list[int], host_adj: list[int]) -> Optional[list[int]]:
    """Injective map of pattern vertices to host vertices preserving adjacency."""
    k, n = len(pattern_adj), len(host_adj)
    if k > n:
        return None
    pdeg = [popcount(m) for m in pattern_adj]
    hdeg = [popcount(m) for m in host_adj]
    order = []
    placed = 0
    remaining = set(range(k))
    while remaining:
        # next: most links into the placed set, then highest degree
        p = max(remaining, key=lambda x: (popcount(pattern_adj[x] & placed), pdeg[x], -x))
        order.append(p)
        placed |= 1 << p
        remaining.discard(p)
    image = [-1] * k
    used = 0

    def rec(i):
        nonlocal used
        if i == k:
            return True
        p = order[i]
        cand = ((1 << n) - 1) & ~used
        for q in bits(pattern_adj[p]):
            if image[q] >= 0:
                cand &= host_adj[image[q]]
        for x in bits(cand):
            if hdeg[x] < pdeg[p]:
                continue
            image[p] = x
            used |= 1 << x
            if rec(i + 1):
                return True
            used &= ~(1 << x)
            image[p] = -1
        return False

    return image if rec(0) else None


class _MinorSearch:
    def __init__(self, host: SimpleGraph, pattern: SimpleGraph):
        self.host = host
        self.pattern = pattern
        self.k = pattern.order
        self.m = pattern.size
        self.reducible = pattern.order > 0 and min(pattern.degrees()) >= 3
        self.failed = set()

    @staticmethod
    def _quotient(adj: list[int], sets: list[frozenset], u: int, v: int):
        """Merge super-vertex ``v`` into ``u``."""
        n = len(adj)
        keep = [x for x in range(n) if x != v]
        index = {x: i for i, x in enumerate(keep)}
        merged = (adj[u] | adj[v]) & ~(1 << u | 1 << v)
        new_adj = []
        for x in keep:
            row = merged if x == u else adj[x]
            if x != u and row >> v & 1:
                row = (row & ~(1 << v)) | (1 << u)
            m = 0
            for y in bits(row):
                if y != x:
                    m |= 1 << index[y]
            new_adj.append(m)
        new_sets = [sets[x] | sets[v] if x == u else sets[x] for x in keep]
        return new_adj, new_sets

    @staticmethod
    def _drop(adj, sets, v):
        keep = [x for x in range(len(adj)) if x != v]
        index = {x: i for i, x in enumerate(keep)}
        new_adj = []
        for x in keep:
            m = 0
            for y in bits(adj[x]):
                if y != v:
                    m |= 1 << index[y]
            new_adj.append(m)
        return new_adj, [sets[x] for x in keep]

    def _simplify(self, adj, sets):
        while True:
            low = next((x for x in range(len(adj)) if popcount(adj[x]) <= 2), None)
            if low is None:
                return adj, sets
            if popcount(adj[low]) <= 1:
                adj, sets = self._drop(adj, sets, low)
            else:
                u = next(bits(adj[low]))
                adj, sets = self._quotient(adj, sets, u, low)

    def run(self, adj, sets):
        if self.reducible:
            adj, sets = self._simplify(adj, sets)
        n = len(adj)
        size = sum(popcount(m) for m in adj) // 2
        if n < self.k or size < self.m:
            return None
        image = monomorphism(list(self.pattern.adj), adj)
        if image is not None:
            return [sets[x] for x in image]
        if n == self.k:
            return None
        key = canonical_form(SimpleGraph(n, tuple(adj)))
        if key in self.failed:
            return None
        for x in range(n):
            for y in bits(adj[x] >> (x + 1) << (x + 1)):
                found = self.run(*self._quotient(adj, sets, x, y))
                if found is not None:
                    return found
        self.failed.add(key)
        return None


def has_minor(host: SimpleGraph, pattern: SimpleGraph, name: str = "pattern") -> Optional[MinorWitness]:
    """A verified minor model of ``pattern`` in ``host``, or None if none exists."""
    if pattern.order == 0:
        return MinorWitness(name, pattern, (), {})
    if pattern.size > host.size or pattern.order > host.order:
        return None
    search = _MinorSearch(host, pattern)
    sets = search.run(list(host.adj), [frozenset([v]) for v in range(host.order)])
    if sets is None:
        return None
    w = witness_from_sets(host, pattern, name, sets)
    if w is None:
        raise AssertionError("minor search produced an invalid model")
    return w
