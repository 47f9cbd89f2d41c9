import random
from itertools import combinations

import networkx as nx
import pytest

from ikgraphs.canon import canonical_form
from ikgraphs.catalog import catalog_lookup
from ikgraphs.graph import Multigraph, SimpleGraph
from ikgraphs.obstruction import is_planar
from ikgraphs.reduction import (
    count_equation,
    delete_pair,
    format_report,
    is_reduction_k33,
    multigraph_sidecar,
    reduce,
    reduce_multigraph,
)
from oracles import brute_reduce, random_graph

K33 = SimpleGraph.complete_multipartite(3, 3)
K7 = SimpleGraph.complete(7)
PETERSEN = catalog_lookup("Petersen").graph


def dense(n_edges):
    """Relabel an edge multiset onto 0..k-1 in sorted vertex order."""
    vs = sorted({x for e in n_edges for x in e})
    idx = {v: i for i, v in enumerate(vs)}
    return Multigraph(len(vs), tuple((idx[x], idx[y]) for x, y in n_edges))


def random_cases(seed, count, max_order=14):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(3, max_order)
        g = random_graph(rng, n, rng.uniform(0.15, 0.6))
        a, b = rng.sample(range(n), 2)
        yield g, a, b


class TestDeletePair:
    def test_k33_same_part_leaves_star(self):
        m = delete_pair(K33, 0, 1)
        assert m.order == 4 and sorted(m.degrees()) == [1, 1, 1, 3]

    def test_k7_leaves_k5(self):
        assert canonical_form(delete_pair(K7, 2, 5)) == canonical_form(SimpleGraph.complete(5))

    def test_path_endpoints(self):
        m = delete_pair(SimpleGraph.path(3), 0, 2)
        assert m.order == 0 and m.size == 0

    def test_same_vertex(self):
        with pytest.raises(ValueError):
            delete_pair(K33, 1, 1)

    def test_invalid_vertex(self):
        with pytest.raises(IndexError):
            delete_pair(K33, 0, 6)


class TestReduceExamples:
    def test_k33_adjacent_pair(self):
        r = reduce(K33, 0, 3)
        assert (r.ne, r.nv3, r.v4ab, r.vy) == (5, 4, 0, 0)
        assert r.predicted_edges == 0 and r.actual_edges == 0
        assert r.reduced.order == 0

    def test_k33_same_part(self):
        r = reduce(K33, 0, 1)
        assert (r.ne, r.nv3, r.vy) == (6, 3, 1)
        assert r.predicted_edges == -1 and r.actual_edges == 0
        assert r.generic is False

    def test_petersen_nonadjacent(self):
        r = reduce(PETERSEN, 0, 2)
        assert (r.ne, r.nv3, r.vy) == (6, 5, 1)
        assert r.predicted_edges == 3 and r.actual_edges == 3

    def test_k7_untouched(self):
        r = reduce(K7, 0, 1)
        assert r.actual_edges == 10 and r.trace == ()

    def test_cycle_collapses(self):
        r = reduce(SimpleGraph.cycle(6), 0, 3)
        assert r.reduced.order == 0
        assert reduce_multigraph(SimpleGraph.cycle(5).to_multigraph()).order == 0

    def test_smoothing_creates_parallel_edges(self):
        # theta graph with one path of length two becomes a triple edge
        m = Multigraph(3, ((0, 1), (0, 1), (0, 2), (1, 2)))
        r = reduce_multigraph(m)
        assert r.order == 2 and r.multiplicities() == {(0, 1): 3}

    def test_smoothing_creates_loop(self):
        # vertex 0 sends both edges to 1, so smoothing it leaves two loops at 1
        m = Multigraph(2, ((0, 1), (0, 1), (1, 1)))
        r = reduce_multigraph(m)
        assert r.order == 1 and r.multiplicities() == {(0, 0): 2}

    def test_loop_vertex_deleted(self):
        m = Multigraph(2, ((0, 1), (0, 1)))
        assert reduce_multigraph(m).order == 0

    def test_bad_policy(self):
        with pytest.raises(ValueError):
            reduce(K33, 0, 1, policy="sideways")


class TestCountEquation:
    def test_adjacent_five_four(self):
        g = catalog_lookup("Cousin29").graph  # a = 0 has degree 5, 1 has degree 4
        assert g.degree(0) == 5 and g.degree(1) == 4 and g.has_edge(0, 1)
        assert count_equation(g, 0, 1)[0] == 8

    def test_nonadjacent_five_four(self):
        g = catalog_lookup("U12").graph
        d = next(v for v in range(g.order) if g.degree(v) == 4 and not g.has_edge(0, v) and v != 0)
        assert count_equation(g, 0, d)[0] == 9

    def test_k33_same_part(self):
        assert count_equation(K33, 0, 1)[4] == -1

    def test_terms_nonnegative(self):
        for g, a, b in random_cases(1, 300):
            ne, nv3, v4ab, vy, _ = count_equation(g, a, b)
            assert min(ne, nv3, v4ab, vy) >= 0


class TestIsReductionK33:
    def test_construction(self):
        edges = list(K33.edges) + [(6, 0), (6, 1), (6, 2), (7, 3), (7, 4), (7, 5), (6, 7)]
        g = SimpleGraph.from_edges(8, edges)
        assert is_reduction_k33(g, 6, 7)

    def test_subdivided_k33(self):
        # subdivide one edge of K33 and attach the extra pair to the subdivision vertex
        edges = [e for e in K33.edges if e != (0, 3)] + [(0, 6), (6, 3), (6, 7), (7, 8), (8, 1), (8, 4)]
        g = SimpleGraph.from_edges(9, edges)
        assert is_reduction_k33(g, 7, 8)

    def test_k7(self):
        assert not any(is_reduction_k33(K7, a, b) for a, b in combinations(range(7), 2))

    def test_cousin29_a_d1(self):
        g = catalog_lookup("Cousin29").graph
        # d1 is the vertex other than a adjacent to all three degree-4 neighbours of a
        b = [v for v in g.neighbors(0) if g.degree(v) == 4]
        d1 = next(v for v in range(1, g.order) if all(g.has_edge(v, x) for x in b))
        assert is_reduction_k33(g, 0, d1)


class TestProperties:
    def test_fixpoint_soundness(self):
        for g, a, b in random_cases(2, 400):
            r = reduce(g, a, b)
            assert all(d >= 3 for d in r.reduced.degrees())
            assert reduce_multigraph(r.reduced) == r.reduced

    def test_matches_edge_list_oracle(self):
        for g, a, b in random_cases(3, 400, max_order=11):
            r = reduce(g, a, b)
            n, es = brute_reduce(g.order, g.edges, a, b)
            assert r.reduced.order == n
            assert r.actual_edges == len(es)
            if n:
                assert canonical_form(r.reduced) == canonical_form(dense(es))

    def test_confluence(self):
        rng = random.Random(99)
        for g, a, b in random_cases(4, 400):
            low = reduce(g, a, b, "low").reduced
            high = reduce(g, a, b, "high").reduced
            rand = reduce(g, a, b, rng).reduced
            assert canonical_form(low) == canonical_form(high) == canonical_form(rand)

    def test_planarity_preserved(self):
        for g, a, b in random_cases(5, 500, max_order=12):
            r = reduce(g, a, b)
            direct = nx.check_planarity(nx.Graph(delete_pair(g, a, b).underlying().edges))[0]
            assert is_planar(r.reduced) == direct

    def test_generic_exact(self):
        hits = 0
        for g, a, b in random_cases(6, 1000):
            r = reduce(g, a, b)
            if r.generic:
                hits += 1
                assert r.predicted_edges == r.actual_edges
        assert hits > 50


def test_format_report():
    r = reduce(K33, 0, 1)
    text = format_report(r, "C1")
    assert "predicted_edges: -1" in text and "generic: false" in text
    assert text.rstrip().endswith("condition_tag: C1")


def test_sidecar():
    m = Multigraph(3, ((0, 1), (0, 1), (2, 2)))
    assert multigraph_sidecar(m) == "0 1 2\n2 2 1\n"
