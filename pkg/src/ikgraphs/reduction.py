"""Deleting a vertex pair and reducing what is left.

``reduce(g, a, b)`` removes ``a`` and ``b``, then repeatedly deletes vertices
of degree at most 1 and smooths vertices of degree 2 until neither exists.
Smoothing may produce loops and parallel edges.  The edge count of the result
is compared with the count equation

    |E| - NE(a,b) - (NV3(a,b) + |V4(a,b)| + |VY(a,b)|)

which is exact when the pair sits in a generic configuration.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .canon import are_isomorphic
from .graph import Multigraph, SimpleGraph, neighborhood_profile

__all__ = [
    "ReductionReport",
    "delete_pair",
    "reduce_multigraph",
    "reduce",
    "count_equation",
    "is_reduction_k33",
    "format_report",
    "multigraph_sidecar",
]

K33 = SimpleGraph.complete_multipartite(3, 3)


@dataclass(frozen=True)
class ReductionReport:
    a: int
    b: int
    reduced: Multigraph
    labels: tuple  # reduced vertex -> vertex of the input graph
    actual_edges: int
    ne: int
    nv3: int
    v4ab: int
    vy: int
    predicted_edges: int
    generic: bool
    trace: tuple  # (operation, vertex, edges removed)


def _check_pair(g: SimpleGraph, a: int, b: int) -> None:
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise ValueError("a and b must be distinct")


def _pack(adj: dict) -> tuple[Multigraph, tuple]:
    labels = tuple(sorted(adj))
    index = {v: i for i, v in enumerate(labels)}
    edges = []
    for v in labels:
        for u, k in adj[v].items():
            if u > v:
                edges.extend([(index[v], index[u])] * k)
            elif u == v:
                edges.extend([(index[v], index[v])] * k)
    return Multigraph(len(labels), tuple(edges)), labels


def delete_pair(g: SimpleGraph, a: int, b: int) -> Multigraph:
    """``g`` without ``a``, ``b``, their edges, and any vertex left isolated."""
    _check_pair(g, a, b)
    keep = [v for v in range(g.order) if v not in (a, b) and g.adj[v] & ~(1 << a | 1 << b)]
    sub, _ = g.induced(keep)
    return sub.to_multigraph()


def _degree(adj: dict, v: int) -> int:
    c = adj[v]
    return sum(c.values()) + c.get(v, 0)


def _fixpoint(adj: dict, policy) -> list:
    """Prune and smooth ``adj`` in place; returns the operation trace."""
    trace = []
    deg = {v: _degree(adj, v) for v in adj}
    while True:
        low = [v for v, d in deg.items() if d <= 2]
        if not low:
            return trace
        if policy == "low":
            v = min(low)
        elif policy == "high":
            v = max(low)
        else:
            v = policy.choice(sorted(low))
        c = adj.pop(v)
        d = deg.pop(v)
        if d <= 1:
            for u, k in c.items():
                del adj[u][v]
                deg[u] -= k
            trace.append(("prune", v, sum(c.values())))
        elif c.get(v, 0) == 1:
            trace.append(("loop", v, 1))
        else:
            u, w = [u for u, k in c.items() for _ in range(k)]
            for x in {u, w}:
                del adj[x][v]
            adj[u][w] += 1
            if u != w:
                adj[w][u] += 1
            trace.append(("smooth", v, 1))


def _to_adj(m: Multigraph) -> dict:
    adj = {v: Counter() for v in range(m.order)}
    for u, v in m.edges:
        adj[u][v] += 1
        if u != v:
            adj[v][u] += 1
    return adj


def reduce_multigraph(m: Multigraph) -> Multigraph:
    """Prune/smooth fixpoint of an arbitrary multigraph."""
    adj = _to_adj(m)
    _fixpoint(adj, "low")
    return _pack(adj)[0]


def count_equation(g: SimpleGraph, a: int, b: int) -> tuple[int, int, int, int, int]:
    """``(ne, nv3, v4ab, vy, predicted_edges)`` without performing the reduction."""
    _check_pair(g, a, b)
    return _terms(g, a, b, neighborhood_profile(g, a, b))


def _terms(g, a, b, p):
    ne = g.degree(a) + g.degree(b) - g.has_edge(a, b)
    nv3 = len(p.Vn_a[3]) + len(p.Vn_b[3]) - len(p.Vn_ab[3])
    v4ab = len(p.Vn_ab[4])
    vy = len(p.VY)
    return ne, nv3, v4ab, vy, g.size - ne - (nv3 + v4ab + vy)


def _generic(g: SimpleGraph, a: int, b: int, p, trace) -> bool:
    v3ab = p.Vn_ab[3]
    mask = 0
    for d in v3ab:
        mask |= 1 << d
    for c in range(g.order):
        if c not in (a, b) and bin(g.adj[c] & mask).count("1") >= 2:
            return False
    charges = [p.Vn_a[3] - v3ab, p.Vn_b[3] - v3ab, p.Vn_ab[4], p.VY]
    seen = set(v3ab)
    for s in charges:
        if seen & s:
            return False
        seen |= s
    pruned = {v for op, v, k in trace if op == "prune" and k == 1}
    smoothed = {v for op, v, _ in trace if op == "smooth"}
    if len(trace) != len(pruned) + len(smoothed):
        return False
    return pruned == set(v3ab) and smoothed == seen - set(v3ab)


def reduce(g: SimpleGraph, a: int, b: int, policy="low") -> ReductionReport:
    """Reduce ``g`` at the pair ``(a, b)``.

    ``policy`` picks the next low-degree vertex: ``"low"``, ``"high"`` or a
    ``random.Random`` instance.  The reduced graph is the same up to
    isomorphism for every policy.
    """
    _check_pair(g, a, b)
    adj = {}
    for v in range(g.order):
        if v in (a, b):
            continue
        adj[v] = Counter({u: 1 for u in g.neighbors(v) if u not in (a, b)})
    if isinstance(policy, random.Random) or policy in ("low", "high"):
        trace = _fixpoint(adj, policy)
    else:
        raise ValueError(f"unknown policy {policy!r}")
    reduced, labels = _pack(adj)
    p = neighborhood_profile(g, a, b)
    ne, nv3, v4ab, vy, predicted = _terms(g, a, b, p)
    return ReductionReport(
        a=a, b=b, reduced=reduced, labels=labels, actual_edges=reduced.size,
        ne=ne, nv3=nv3, v4ab=v4ab, vy=vy, predicted_edges=predicted,
        generic=_generic(g, a, b, p, trace), trace=tuple(trace),
    )


def is_reduction_k33(g: SimpleGraph, a: int, b: int) -> bool:
    r = reduce(g, a, b)
    return r.reduced.is_simple() and r.actual_edges == 9 and are_isomorphic(r.reduced.to_simple(), K33)


def multigraph_sidecar(m: Multigraph) -> str:
    """One ``u v k`` line per distinct edge (loops as ``v v k``)."""
    return "".join(f"{u} {v} {k}\n" for (u, v), k in sorted(m.multiplicities().items()))


def format_report(r: ReductionReport, tag: Optional[str] = None) -> str:
    lines = [
        f"a: {r.a}",
        f"b: {r.b}",
        f"NE: {r.ne}",
        f"NV3: {r.nv3}",
        f"V4ab: {r.v4ab}",
        f"VY: {r.vy}",
        f"predicted_edges: {r.predicted_edges}",
        f"actual_edges: {r.actual_edges}",
        f"generic: {str(r.generic).lower()}",
        f"reduced_order: {r.reduced.order}",
        f"reduced_labels: {' '.join(map(str, r.labels))}",
        f"condition_tag: {tag or 'none'}",
    ]
    return "\n".join(lines) + "\n"
