import random
from itertools import combinations

import pytest

from ikgraphs.canon import are_isomorphic, canonical_form, canonical_relabel
from ikgraphs.catalog import catalog_lookup
from ikgraphs.graph import (
    Multigraph,
    SimpleGraph,
    degree_sequence,
    is_connected,
    is_triangle_free,
    neighborhood_profile,
)
from oracles import brute_isomorphic, brute_triangle_free, random_graph, random_perm

K33 = SimpleGraph.complete_multipartite(3, 3)
PETERSEN = catalog_lookup("Petersen").graph


def prism():
    return SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def kneser_5_2():
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return SimpleGraph.from_edges(10, edges)


class TestSimpleGraph:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(3, [(1, 1)])

    def test_rejects_parallel_edges(self):
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(3, [(0, 3)])

    def test_bad_vertex_query(self):
        with pytest.raises(IndexError):
            K33.check_vertex(6)

    def test_relabel_preserves_edges(self):
        g = SimpleGraph.path(4)
        h = g.relabel([3, 2, 1, 0])
        assert sorted(h.edges) == [(0, 1), (1, 2), (2, 3)]


class TestMultigraph:
    def test_loop_counts_twice(self):
        m = Multigraph(2, ((0, 0), (0, 1)))
        assert m.degree(0) == 3 and m.degree(1) == 1

    def test_parallel_and_loop_flags(self):
        m = Multigraph(2, ((0, 1), (1, 0), (1, 1)))
        assert m.has_parallel() and m.has_loop() and not m.is_simple()
        assert m.underlying().edges == ((0, 1),)

    def test_endpoint_range(self):
        with pytest.raises(ValueError):
            Multigraph(2, ((0, 2),))


class TestDegreeSequence:
    def test_k7(self):
        assert degree_sequence(SimpleGraph.complete(7)) == (6,) * 7

    def test_k33(self):
        assert degree_sequence(K33) == (3,) * 6

    def test_single_vertex(self):
        assert degree_sequence(SimpleGraph(1, (0,))) == (0,)

    def test_descending(self):
        assert degree_sequence(SimpleGraph.path(4)) == (2, 2, 1, 1)


class TestTriangleFree:
    def test_k33(self):
        assert is_triangle_free(K33)

    def test_k3311(self):
        assert not is_triangle_free(catalog_lookup("K3311").graph)

    def test_petersen(self):
        triples = combinations(range(10), 3)
        assert not any(all(PETERSEN.has_edge(x, y) for x, y in combinations(t, 2)) for t in triples)
        assert is_triangle_free(PETERSEN)

    def test_matches_common_neighbour_check(self):
        rng = random.Random(11)
        for _ in range(500):
            g = random_graph(rng, rng.randint(1, 12), rng.random() * 0.6)
            assert is_triangle_free(g) == brute_triangle_free(g)


class TestNeighborhoodProfile:
    def test_k33_same_part(self):
        p = neighborhood_profile(K33, 0, 1)
        assert p.Vn_ab[3] == {3, 4, 5}
        assert p.VY == {2}

    def test_k33_adjacent(self):
        p = neighborhood_profile(K33, 0, 3)
        assert p.Vn_ab[3] == frozenset()

    def test_path_endpoint(self):
        p = neighborhood_profile(SimpleGraph.path(3), 0)
        assert p.bar_V == {2}
        assert p.bar_E == frozenset()

    def test_pair_excluded_from_sets(self):
        # a and b adjacent and both of degree 3 in K33
        p = neighborhood_profile(K33, 0, 3)
        assert 3 not in p.Vn_a[3] and 0 not in p.Vn_b[3]

    def test_invalid_vertex(self):
        with pytest.raises(IndexError):
            neighborhood_profile(K33, 9)

    def test_same_vertex(self):
        with pytest.raises(ValueError):
            neighborhood_profile(K33, 2, 2)

    def test_set_algebra(self):
        rng = random.Random(5)
        for _ in range(300):
            g = random_graph(rng, rng.randint(3, 12), 0.4)
            a, b = rng.sample(range(g.order), 2)
            p = neighborhood_profile(g, a, b)
            assert len(p.V_a) == g.degree(a)
            assert not p.bar_V & p.V_a and a not in p.bar_V
            for n in (3, 4, 5):
                assert p.Vn_ab[n] == p.Vn_a[n] & p.Vn_b[n]
                assert p.Vn_a[n] <= p.V_a
            for u, v in p.bar_E:
                assert u in p.bar_V and v in p.bar_V and g.has_edge(u, v)


class TestCanonicalForm:
    def test_random_relabelling(self):
        rng = random.Random(2024)
        for _ in range(500):
            g = random_graph(rng, rng.randint(1, 12), rng.random())
            h = g.relabel(random_perm(rng, g.order))
            assert canonical_form(g) == canonical_form(h)

    def test_k33_vs_prism(self):
        assert canonical_form(K33) != canonical_form(prism())

    def test_two_petersen_labelings(self):
        assert canonical_form(PETERSEN) == canonical_form(kneser_5_2())

    def test_relabel_is_fixed_point(self):
        g = canonical_relabel(PETERSEN)
        assert canonical_relabel(g) == g

    def test_multiplicity_matters(self):
        single = Multigraph(2, ((0, 1),))
        double = Multigraph(2, ((0, 1), (0, 1)))
        assert canonical_form(single) != canonical_form(double)

    def test_loop_matters(self):
        a = Multigraph(3, ((0, 1), (1, 2), (0, 0)))
        b = Multigraph(3, ((0, 1), (1, 2), (1, 1)))
        assert canonical_form(a) != canonical_form(b)

    def test_multigraph_relabelling(self):
        rng = random.Random(8)
        for _ in range(200):
            n = rng.randint(1, 8)
            edges = [tuple(sorted((rng.randrange(n), rng.randrange(n)))) for _ in range(rng.randint(0, 14))]
            m = Multigraph(n, tuple(edges))
            perm = random_perm(rng, n)
            m2 = Multigraph(n, tuple((perm[u], perm[v]) for u, v in edges))
            assert canonical_form(m) == canonical_form(m2)

    def test_simple_multigraph_agrees_with_simple(self):
        assert canonical_form(K33) == canonical_form(K33.to_multigraph())


class TestAreIsomorphic:
    def test_reflexive(self):
        assert are_isomorphic(PETERSEN, PETERSEN)

    def test_degree_sequences_differ(self):
        assert not are_isomorphic(SimpleGraph.path(4), SimpleGraph.cycle(4))

    def test_c6_vs_two_triangles(self):
        two = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not are_isomorphic(SimpleGraph.cycle(6), two)

    def test_agrees_with_permutation_search(self):
        rng = random.Random(3)
        for _ in range(250):
            n = rng.randint(1, 7)
            g = random_graph(rng, n, 0.5)
            # same-size partner: either a relabelling or a random graph with equal edge count
            if rng.random() < 0.5:
                h = g.relabel(random_perm(rng, n))
            else:
                pairs = list(combinations(range(n), 2))
                h = SimpleGraph.from_edges(n, rng.sample(pairs, g.size))
            assert are_isomorphic(g, h) == brute_isomorphic(g, h)
            assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)


def test_connectivity():
    assert is_connected(K33)
    assert not is_connected(SimpleGraph(2, (0, 0)))
