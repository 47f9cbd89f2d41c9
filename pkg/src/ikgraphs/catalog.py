"""Named graphs.

The 22-edge graphs with a unique degree-5 vertex are labelled
``a = 0``, then the degree-4 neighbours of ``a``, then its degree-3
neighbours, then the vertices at distance two or more, larger degree first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import SimpleGraph

__all__ = ["CatalogEntry", "catalog_lookup", "catalog_names", "THEOREM_GRAPHS"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: SimpleGraph
    marked: dict = field(default_factory=dict)
    note: str = ""


def _petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner)


_N9_EDGES = [
    (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4),
    (3, 5), (0, 6), (1, 6), (2, 7), (3, 7), (4, 8), (5, 8), (6, 7), (6, 8), (7, 8),
]

_TABLE = {
    "N9": (9, _N9_EDGES, {}, "9-vertex member of the K7 family not reachable from K7 by triangle-Y moves"),
    "E9+e": (9, _N9_EDGES + [(0, 7)], {"e": (0, 7)}, "N9 plus the edge e joining a degree-5 and a degree-4 vertex"),
    "Cousin29": (13, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (1, 10), (2, 6), (2, 8), (2, 9),
        (3, 6), (3, 11), (3, 12), (4, 7), (4, 8), (5, 9), (5, 10), (7, 11), (8, 12), (9, 11), (10, 12),
    ], {}, "triangle-free K3311 cousin of degree type (3,9)"),
    "Cousin97": (12, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 8), (1, 9), (1, 10), (2, 7), (2, 9), (2, 11),
        (3, 6), (3, 10), (3, 11), (4, 6), (4, 7), (5, 8), (5, 11), (6, 8), (6, 9), (7, 8), (7, 10),
    ], {"e1": (5, 8)}, "triangle-free E9+e cousin, three degree-4 neighbours of a"),
    "Cousin99": (12, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 7), (1, 8), (1, 11), (2, 8), (2, 9), (2, 10),
        (3, 6), (3, 9), (3, 11), (4, 6), (4, 7), (4, 10), (5, 6), (5, 7), (6, 8), (7, 9), (10, 11),
    ], {"e2": (4, 10)}, "triangle-free E9+e cousin, four degree-4 neighbours of a"),
    "U12": (12, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 9), (1, 11), (2, 8), (2, 9), (2, 10),
        (3, 7), (3, 10), (3, 11), (4, 6), (4, 7), (5, 7), (5, 8), (6, 8), (6, 10), (7, 9), (8, 11),
    ], {"e1": (4, 6)}, "outside both families, three degree-4 neighbours of a"),
    "U12'": (12, [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 8), (1, 11), (2, 8), (2, 9), (2, 10),
        (3, 6), (3, 9), (3, 11), (4, 7), (4, 10), (4, 11), (5, 6), (5, 7), (6, 10), (7, 8), (7, 9),
    ], {"e2": (1, 8)}, "outside both families, four degree-4 neighbours of a"),
}

_ALIASES = {"K3311": "K_{3,3,1,1}", "K33": "K_{3,3}", "U'12": "U12'", "U12prime": "U12'"}

THEOREM_GRAPHS = ("Cousin29", "Cousin97", "Cousin99", "U12", "U12'")


def catalog_names() -> list[str]:
    return ["K5", "K7", "K_{3,3}", "K_{3,3,1,1}", "Petersen"] + list(_TABLE)


def catalog_lookup(name: str) -> CatalogEntry:
    name = _ALIASES.get(name, name)
    if name == "K5":
        return CatalogEntry(name, SimpleGraph.complete(5))
    if name == "K7":
        return CatalogEntry(name, SimpleGraph.complete(7))
    if name == "K_{3,3}":
        return CatalogEntry(name, SimpleGraph.complete_multipartite(3, 3))
    if name == "K_{3,3,1,1}":
        return CatalogEntry(name, SimpleGraph.complete_multipartite(3, 3, 1, 1))
    if name == "Petersen":
        return CatalogEntry(name, _petersen())
    if name not in _TABLE:
        raise KeyError(f"unknown catalog graph {name!r}")
    n, edges, marked, note = _TABLE[name]
    return CatalogEntry(name, SimpleGraph.from_edges(n, edges), dict(marked), note)
