"""Canonical labelling by colour refinement and individualisation.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualise each vertex of the first non-singleton cell,
recurse.  The leaf with the lexicographically least certificate wins.
Automorphisms discovered at equal leaves prune sibling branches lying in the
same orbit of the pointwise stabiliser of the current prefix.

Weights on the adjacency let the same routine handle edge multiplicities and
loops; vertex colours seed the initial partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Sequence

from .graph import Multigraph, SimpleGraph, bits

__all__ = ["CanonicalForm", "canonical_labeling", "canonical_form", "canonical_relabel", "are_isomorphic"]


@total_ordering
@dataclass(frozen=True)
class CanonicalForm:
    """Relabelling-invariant encoding of an isomorphism class."""

    data: bytes

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.data < other.data

    def hex(self) -> str:
        return self.data.hex()


def _refine(cells: list[list[int]], nbrs: Sequence[Sequence[tuple[int, int]]]) -> list[list[int]]:
    while True:
        where = {}
        for i, c in enumerate(cells):
            for v in c:
                where[v] = i
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict = {}
            for v in c:
                sig = tuple(sorted((where[u], w) for u, w in nbrs[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            split = True
            for sig in sorted(groups):
                out.append(groups[sig])
        cells = out
        if not split:
            return cells


class _Search:
    def __init__(self, n, nbrs, colors):
        self.n = n
        self.nbrs = nbrs
        self.colors = colors
        self.w = [dict(row) for row in nbrs]
        self.best = None
        self.best_perm = None
        self.autos: list[list[int]] = []

    def certificate(self, perm):
        n, w = self.n, self.w
        cols = tuple(self.colors[v] for v in perm)
        body = tuple(w[perm[i]].get(perm[j], 0) for i in range(n) for j in range(i, n))
        return cols + body

    def orbits_fixing(self, prefix):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if all(g[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def run(self, cells, prefix):
        cells = _refine(cells, self.nbrs)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = [c[0] for c in cells]
            cert = self.certificate(perm)
            if self.best is None or cert < self.best:
                self.best, self.best_perm = cert, perm
            elif cert == self.best:
                g = [0] * self.n
                for i in range(self.n):
                    g[perm[i]] = self.best_perm[i]
                if any(g[v] != v for v in range(self.n)):
                    self.autos.append(g)
            return
        cell = cells[target]
        done = set()
        for v in sorted(cell):
            if done:
                find = self.orbits_fixing(prefix)
                if find(v) in {find(u) for u in done}:
                    continue
            done.add(v)
            rest = [u for u in cell if u != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1:], prefix + [v])


def canonical_labeling(
    nbrs: Sequence[Sequence[tuple[int, int]]], colors: Optional[Sequence] = None
) -> tuple[list[int], tuple]:
    """Canonical order of the vertices and its certificate.

    ``nbrs[v]`` lists ``(u, weight)`` pairs (a loop is ``(v, weight)``).
    Returns ``perm`` with ``perm[i]`` the vertex placed at position ``i``.
    """
    n = len(nbrs)
    if colors is None:
        colors = [0] * n
    if n == 0:
        return [], ()
    by_color: dict = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    cells = [by_color[c] for c in sorted(by_color)]
    s = _Search(n, nbrs, list(colors))
    s.run(cells, [])
    return s.best_perm, s.best


def _weighted(g: SimpleGraph | Multigraph):
    if isinstance(g, SimpleGraph):
        return [[(u, 1) for u in bits(m)] for m in g.adj]
    rows: list[dict] = [dict() for _ in range(g.order)]
    for (u, v), k in g.multiplicities().items():
        rows[u][v] = k
        rows[v][u] = k
    return [sorted(r.items()) for r in rows]


def _encode(n: int, cert: tuple) -> bytes:
    vals = (n,) + cert
    if all(0 <= x < 255 for x in vals):
        return bytes(vals)
    # wide encoding; prefix 255 keeps it disjoint from the narrow one
    return b"\xff" + b"".join(int(x).to_bytes(4, "big") for x in vals)


def canonical_form(g: SimpleGraph | Multigraph) -> CanonicalForm:
    _, cert = canonical_labeling(_weighted(g))
    return CanonicalForm(_encode(g.order, cert))


def canonical_relabel(g: SimpleGraph) -> SimpleGraph:
    """The representative of ``g``'s class in canonical vertex order."""
    perm, _ = canonical_labeling(_weighted(g))
    pos = [0] * g.order
    for i, v in enumerate(perm):
        pos[v] = i
    return g.relabel(pos)


def are_isomorphic(g: SimpleGraph | Multigraph, h: SimpleGraph | Multigraph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
