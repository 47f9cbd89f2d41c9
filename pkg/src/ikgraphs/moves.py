"""Triangle-to-Y and Y-to-triangle moves and the cousin families they generate."""

from __future__ import annotations

import hashlib
import os
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from . import graph6
from .canon import CanonicalForm, canonical_form, canonical_relabel
from .graph import SimpleGraph, degree_sequence, is_triangle_free

__all__ = [
    "MoveError",
    "triangle_y",
    "y_triangle",
    "triangles",
    "legal_moves",
    "Family",
    "family_closure",
    "delta_y_descendants",
    "write_family",
]


class MoveError(ValueError):
    pass


def triangle_y(g: SimpleGraph, triangle: tuple[int, int, int]) -> SimpleGraph:
    """Replace the edges of ``triangle`` by a new vertex (label ``g.order``) joined to its corners."""
    a, b, c = triangle
    for v in triangle:
        g.check_vertex(v)
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)):
        raise MoveError(f"{triangle} is not a triangle")
    tri = {a, b, c}
    edges = [e for e in g.edges if not (e[0] in tri and e[1] in tri)]
    v = g.order
    return SimpleGraph.from_edges(v + 1, edges + [(a, v), (b, v), (c, v)])


def y_triangle(g: SimpleGraph, v: int) -> SimpleGraph:
    """Delete the degree-3 vertex ``v`` and join its three neighbours pairwise.

    Only legal when the neighbours are pairwise non-adjacent, so that the edge
    count is preserved.  Vertices above ``v`` shift down by one.
    """
    g.check_vertex(v)
    if g.degree(v) != 3:
        raise MoveError(f"vertex {v} has degree {g.degree(v)}, not 3")
    a, b, c = g.neighbors(v)
    if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
        raise MoveError(f"neighbours of {v} are not independent")
    shift = lambda x: x - (x > v)
    edges = [(shift(x), shift(y)) for x, y in g.edges if v not in (x, y)]
    edges += [(shift(a), shift(b)), (shift(a), shift(c)), (shift(b), shift(c))]
    return SimpleGraph.from_edges(g.order - 1, edges)


def triangles(g: SimpleGraph) -> Iterator[tuple[int, int, int]]:
    adj = g.adj
    for u, v in g.edges:
        common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
        while common:
            low = common & -common
            yield (u, v, low.bit_length() - 1)
            common ^= low


def legal_moves(g: SimpleGraph) -> Iterator[tuple[str, tuple, SimpleGraph]]:
    for t in triangles(g):
        yield "dY", t, triangle_y(g, t)
    for v in range(g.order):
        if g.degree(v) == 3:
            a, b, c = g.neighbors(v)
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                yield "Yd", (v,), y_triangle(g, v)


@dataclass(frozen=True)
class Family:
    """Cousin closure of ``seed``.

    ``members`` maps each canonical form to its canonically labelled
    representative; ``order`` lists the forms sorted; ``move_edges`` holds
    pairs of indices into ``order``.
    """

    seed: SimpleGraph
    members: dict
    order: tuple
    move_edges: frozenset

    def __len__(self):
        return len(self.order)

    def __contains__(self, g) -> bool:
        key = g if isinstance(g, CanonicalForm) else canonical_form(g)
        return key in self.members

    def graphs(self) -> list[SimpleGraph]:
        return [self.members[k] for k in self.order]

    def index_of(self, g: SimpleGraph) -> Optional[int]:
        key = canonical_form(g)
        try:
            return self.order.index(key)
        except ValueError:
            return None


def family_closure(seed: SimpleGraph, *, delta_y_only: bool = False, shuffle: Optional[random.Random] = None) -> Family:
    """Breadth-first closure of ``seed`` under both moves.

    ``shuffle`` randomises frontier order (the result must not depend on it);
    ``delta_y_only`` restricts to triangle-to-Y moves.
    """
    size = seed.size
    start = canonical_form(seed)
    found = {start: seed}
    links = set()
    frontier = deque([start])
    while frontier:
        if shuffle is not None and len(frontier) > 1:
            items = list(frontier)
            shuffle.shuffle(items)
            frontier = deque(items)
        key = frontier.popleft()
        for kind, _, h in legal_moves(found[key]):
            if delta_y_only and kind != "dY":
                continue
            if h.size != size:
                raise AssertionError("move changed the edge count")
            hk = canonical_form(h)
            if hk not in found:
                found[hk] = h
                frontier.append(hk)
            if hk != key:
                links.add((key, hk) if key < hk else (hk, key))
    order = tuple(sorted(found))
    index = {k: i for i, k in enumerate(order)}
    members = {k: canonical_relabel(found[k]) for k in order}
    edges = frozenset((index[a], index[b]) for a, b in links)
    return Family(seed, members, order, edges)


def delta_y_descendants(seed: SimpleGraph) -> Family:
    return family_closure(seed, delta_y_only=True)


def write_family(fam: Family, directory: str, name: str) -> tuple[str, str]:
    """Write ``<name>.g6`` and ``<name>.index.tsv``; returns both paths."""
    os.makedirs(directory, exist_ok=True)
    g6_path = os.path.join(directory, f"{name}.g6")
    idx_path = os.path.join(directory, f"{name}.index.tsv")
    with open(g6_path, "w") as fh:
        graph6.write_file(fh, fam.graphs())
    with open(idx_path, "w") as fh:
        fh.write("hash\torder\tdegrees\ttriangle_free\n")
        for key in fam.order:
            g = fam.members[key]
            degs = ",".join(map(str, degree_sequence(g)))
            digest = hashlib.sha1(key.data).hexdigest()[:16]
            fh.write(f"{digest}\t{g.order}\t{degs}\t{int(is_triangle_free(g))}\n")
    return g6_path, idx_path
