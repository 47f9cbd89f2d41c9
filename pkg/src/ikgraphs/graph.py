"""Graph values and the neighborhood queries used by the reduction machinery.

Vertices are dense integer labels ``0..order-1``.  A :class:`SimpleGraph`
stores one adjacency bitmask per vertex; a :class:`Multigraph` stores a sorted
edge multiset and admits loops and parallel edges.  Both are immutable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

__all__ = [
    "SimpleGraph",
    "Multigraph",
    "NeighborhoodProfile",
    "degree_sequence",
    "is_triangle_free",
    "is_connected",
    "neighborhood_profile",
    "bits",
    "popcount",
]


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class SimpleGraph:
    order: int
    adj: tuple[int, ...]
    _edges: tuple = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.adj) != self.order:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if m & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.order - 1}")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            if adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, combinations(range(n), 2))

    @classmethod
    def complete_multipartite(cls, *parts: int) -> "SimpleGraph":
        labels = []
        for i, p in enumerate(parts):
            labels.extend([i] * p)
        n = len(labels)
        return cls.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if labels[u] != labels[v]])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            es = tuple((u, v) for u in range(self.order) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))
            object.__setattr__(self, "_edges", es)
        return self._edges

    @property
    def size(self) -> int:
        return sum(popcount(m) for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.order:
            raise IndexError(f"vertex {v!r} is not in 0..{self.order - 1}")

    def relabel(self, perm: list[int]) -> "SimpleGraph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return SimpleGraph.from_edges(self.order, [(perm[u], perm[v]) for u, v in self.edges])

    def induced(self, keep: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        """Induced subgraph on ``keep``; also returns new-label -> old-label."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return SimpleGraph.from_edges(len(keep), es), keep

    def delete_vertices(self, drop: Iterable[int]) -> tuple["SimpleGraph", list[int]]:
        drop = set(drop)
        return self.induced(v for v in range(self.order) if v not in drop)

    def add_edge(self, u: int, v: int) -> "SimpleGraph":
        return SimpleGraph.from_edges(self.order, list(self.edges) + [(u, v)])

    def to_multigraph(self) -> "Multigraph":
        return Multigraph(self.order, self.edges)

    def __repr__(self):
        return f"SimpleGraph(order={self.order}, size={self.size})"


@dataclass(frozen=True)
class Multigraph:
    """Undirected graph with loops and parallel edges.

    ``edges`` is normalised to a sorted tuple of ``(u, v)`` pairs with ``u <= v``;
    a loop is ``(v, v)`` and contributes 2 to the degree of ``v``.
    """

    order: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {self.order}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> list[int]:
        d = [0] * self.order
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def multiplicities(self) -> Counter:
        return Counter(self.edges)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def has_parallel(self) -> bool:
        """True if some pair of distinct vertices is joined by two or more edges (a 2-cycle)."""
        return any(k > 1 and u != v for (u, v), k in self.multiplicities().items())

    def is_simple(self) -> bool:
        return not self.has_loop() and all(k == 1 for k in self.multiplicities().values())

    def underlying(self) -> SimpleGraph:
        """Drop loops and collapse parallel edges."""
        return SimpleGraph.from_edges(self.order, sorted({e for e in self.edges if e[0] != e[1]}))

    def to_simple(self) -> SimpleGraph:
        if not self.is_simple():
            raise ValueError("multigraph has loops or parallel edges")
        return SimpleGraph.from_edges(self.order, self.edges)

    def __repr__(self):
        return f"Multigraph(order={self.order}, size={self.size})"


def degree_sequence(g: SimpleGraph | Multigraph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))


def is_triangle_free(g: SimpleGraph) -> bool:
    adj = g.adj
    return all(adj[u] & adj[v] == 0 for u, v in g.edges)


def is_connected(g: SimpleGraph | Multigraph) -> bool:
    if g.order == 0:
        return True
    if isinstance(g, Multigraph):
        g = g.underlying()
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.order) - 1


@dataclass(frozen=True)
class NeighborhoodProfile:
    """Vertex sets around ``a`` (and optionally ``b``) used by the count equation.

    ``Vn_a[n]`` is the set of neighbours of ``a`` of degree ``n``, never
    containing ``a`` or ``b``; ``Vn_ab[n]`` is the intersection with ``Vn_b[n]``.
    ``VY`` is the set of degree-3 vertices other than ``a, b`` adjacent to some
    vertex of ``Vn_ab[3]``.
    """

    a: int
    b: Optional[int]
    V_a: frozenset
    Vn_a: dict
    bar_V: frozenset
    bar_E: frozenset
    V_b: frozenset = frozenset()
    Vn_b: dict = field(default_factory=dict)
    Vn_ab: dict = field(default_factory=dict)
    VY: frozenset = frozenset()


def _by_degree(g: SimpleGraph, vs: Iterable[int], exclude: set) -> dict:
    out = {n: set() for n in (3, 4, 5)}
    for c in vs:
        if c in exclude:
            continue
        out.setdefault(g.degree(c), set()).add(c)
    return {n: frozenset(s) for n, s in out.items()}


def neighborhood_profile(g: SimpleGraph, a: int, b: Optional[int] = None) -> NeighborhoodProfile:
    g.check_vertex(a)
    if b is not None:
        g.check_vertex(b)
        if a == b:
            raise ValueError("a and b must be distinct")
    excl = {a} if b is None else {a, b}
    V_a = frozenset(g.neighbors(a))
    Vn_a = _by_degree(g, V_a, excl)
    bar_V = frozenset(set(range(g.order)) - V_a - {a})
    bar_E = frozenset((u, v) for u, v in g.edges if u in bar_V and v in bar_V)
    if b is None:
        return NeighborhoodProfile(a, None, V_a, Vn_a, bar_V, bar_E)
    V_b = frozenset(g.neighbors(b))
    Vn_b = _by_degree(g, V_b, excl)
    Vn_ab = {n: Vn_a.get(n, frozenset()) & Vn_b.get(n, frozenset()) for n in set(Vn_a) | set(Vn_b)}
    VY = set()
    for d in Vn_ab[3]:
        for c in g.neighbors(d):
            if c not in excl and g.degree(c) == 3:
                VY.add(c)
    return NeighborhoodProfile(a, b, V_a, Vn_a, bar_V, bar_E, V_b, Vn_b, Vn_ab, frozenset(VY))
