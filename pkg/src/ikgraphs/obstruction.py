"""Planarity, 2-apex certificates, the small-reduction criteria, and IK certificates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

import networkx as nx

from .canon import canonical_form
from .catalog import catalog_lookup
from .graph import Multigraph, SimpleGraph
from .minors import MinorWitness, contract_edge, find_isomorphism, has_minor, witness_from_sets
from .moves import delta_y_descendants, family_closure
from .reduction import ReductionReport, delete_pair, reduce_multigraph

__all__ = [
    "ApexCertificate",
    "is_planar",
    "kuratowski_subgraph",
    "is_2_apex",
    "prop1_evaluate",
    "known_ik_graphs",
    "certify_ik",
]

K5 = SimpleGraph.complete(5)
K33 = SimpleGraph.complete_multipartite(3, 3)


def _nx(g: SimpleGraph | Multigraph) -> nx.Graph:
    if isinstance(g, Multigraph):
        g = g.underlying()
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges)
    return G


def is_planar(g: SimpleGraph | Multigraph) -> bool:
    """Planarity of the underlying simple graph; loops and multiplicities are ignored."""
    if isinstance(g, SimpleGraph):
        g = g.to_multigraph()
    r = reduce_multigraph(g).underlying()
    n, m = r.order, r.size
    if m < 9 or n < 5:
        return True
    if m > 3 * n - 6:
        return False
    return nx.check_planarity(_nx(r))[0]


def kuratowski_subgraph(g: SimpleGraph | Multigraph) -> Optional[list[tuple[int, int]]]:
    """Edges of a K5 or K3,3 subdivision in ``g``, or None when planar."""
    ok, cert = nx.check_planarity(_nx(g), counterexample=True)
    if ok:
        return None
    return sorted(tuple(sorted(e)) for e in cert.edges)


@dataclass(frozen=True)
class ApexCertificate:
    pair: tuple[int, int]

    def verify(self, g: SimpleGraph) -> bool:
        return is_planar(delete_pair(g, *self.pair))

    def format(self) -> str:
        return f"deleted: {self.pair[0]} {self.pair[1]}\nremainder: planar\n"


def is_2_apex(g: SimpleGraph) -> Optional[ApexCertificate]:
    """First pair, in lexicographic order, whose deletion leaves a planar graph."""
    if g.order <= 2:
        return ApexCertificate((0, 1)) if g.order == 2 else None
    for a, b in combinations(range(g.order), 2):
        if is_planar(delete_pair(g, a, b)):
            return ApexCertificate((a, b))
    return None


def prop1_evaluate(r: ReductionReport) -> Optional[str]:
    """Which of the three small-reduction criteria, if any, the reduced graph meets.

    ``"C1"``: at most 8 edges.  ``"C2"``: exactly 9 edges and not K3,3.
    ``"C3"``: exactly 10 edges, a 2-cycle, and no K3,3 minor.  Each tag means
    the deleted pair leaves a planar graph.
    """
    m = r.reduced
    if r.actual_edges <= 8:
        return "C1"
    if r.actual_edges == 9:
        if m.is_simple() and canonical_form(m) == canonical_form(K33):
            return None
        return "C2"
    if r.actual_edges == 10 and m.has_parallel():
        if has_minor(m.underlying(), K33) is None:
            return "C3"
    return None


@lru_cache(maxsize=None)
def known_ik_graphs() -> tuple[tuple[str, SimpleGraph], ...]:
    """K7 with its triangle-Y descendants, then the K3311 family, named by canonical position."""
    out = []
    for i, g in enumerate(delta_y_descendants(catalog_lookup("K7").graph).graphs()):
        out.append((f"K7-dY/{i:02d}/n{g.order}", g))
    for i, g in enumerate(family_closure(catalog_lookup("K_{3,3,1,1}").graph).graphs()):
        out.append((f"K3311-fam/{i:02d}/n{g.order}", g))
    return tuple(out)


def _index(known) -> dict:
    idx = {}
    for name, g in known:
        idx.setdefault(canonical_form(g), (name, g))
    return idx


@lru_cache(maxsize=4)
def _default_index():
    return _index(known_ik_graphs())


def pattern_by_name(name: str) -> SimpleGraph:
    for n, g in known_ik_graphs():
        if n == name:
            return g
    raise KeyError(name)


def certify_ik(g: SimpleGraph, known_ik: Optional[Iterable[tuple[str, SimpleGraph]]] = None) -> Optional[MinorWitness]:
    """A minor model of a known intrinsically knotted graph inside ``g``.

    Tries isomorphism first, then every single-edge contraction, then a full
    minor search against each known graph small enough to fit.
    """
    if known_ik is None:
        known = known_ik_graphs()
        index = _default_index()
    else:
        known = tuple(known_ik)
        index = _index(known)
    hit = index.get(canonical_form(g))
    if hit is not None:
        name, pat = hit
        phi = find_isomorphism(pat, g)
        return witness_from_sets(g, pat, name, [[phi[p]] for p in range(pat.order)])
    for u, v in g.edges:
        c = contract_edge(g, (u, v))
        hit = index.get(canonical_form(c))
        if hit is None:
            continue
        name, pat = hit
        phi = find_isomorphism(pat, c)
        # contracted graph keeps u, drops v and shifts labels above v down
        back = [x + (x >= v) for x in range(c.order)]
        sets = []
        for p in range(pat.order):
            x = back[phi[p]]
            sets.append([u, v] if x == u else [x])
        return witness_from_sets(g, pat, name, sets)
    for name, pat in known:
        if pat.size <= g.size and pat.order <= g.order:
            w = has_minor(g, pat, name)
            if w is not None:
                return w
    return None
