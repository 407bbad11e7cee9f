from __future__ import annotations

import random

import networkx as nx
import pytest
from conftest import shuffled

from radpoly.enumeration import Catalog, ChordDiagram, IncompleteCatalogError, apex_graph, wheel
from radpoly.graph import Graph
from radpoly.sequences import FamilyClass, realize_family
from radpoly.structure import (
    LemmaPreconditionError,
    NotRadiusOnePolytopeError,
    biconnected_components,
    block_cycle_profile,
    check_lemma_block_inequality,
    check_triangle_structure,
    check_unigraphic_structure,
    chord_set,
    count_degree_three,
    cycle_rank,
    decompose,
    decompositions,
    is_caterpillar_forest,
    lemma_block_bound,
    noncrossing,
)

TRIANGLE7 = apex_graph(ChordDiagram.of(6, [(0, 2), (2, 4), (0, 4)]))
ONE_CHORD5 = apex_graph(ChordDiagram.of(4, [(0, 2)]))


class TestDecompose:
    def test_wheel7(self):
        d = decompose(wheel(7))
        assert d.apex == 6
        assert len(d.h_cycle) == 6
        assert d.chord_graph.m == 0 and d.is_pyramid
        assert d.a == 6

    def test_one_chord(self):
        d = decompose(ONE_CHORD5)
        assert d.chord_graph.m == 1
        assert d.a == 2
        assert d.s_prime == (1, 1, 0, 0)

    def test_triangle(self):
        d = decompose(TRIANGLE7)
        assert d.a == 3
        assert d.chord_graph.m == 3 and cycle_rank(d.chord_graph) == 1
        assert sum(1 for v in range(6) if not d.chord_graph.adj[v]) == 3

    def test_invariants_on_shuffled_inputs(self, chord_catalog):
        rng = random.Random(7)
        for rec in chord_catalog.records(p=9):
            g = shuffled(rec.graph, rng)
            for d in decompositions(g):
                base = g.remove_vertex(d.apex)
                assert sorted(d.h_cycle) == list(range(g.n - 1))
                n = len(d.h_cycle)
                assert all(base.has_edge(d.h_cycle[i], d.h_cycle[(i + 1) % n]) for i in range(n))
                assert d.chord_graph.m == base.m - n
                assert noncrossing(d)
                assert all(j - i >= 2 for i, j in chord_set(d))
                assert all(g.degree(d.labels[v]) - 3 == d.chord_graph.degree(v) for v in range(n))

    def test_errors(self):
        with pytest.raises(NotRadiusOnePolytopeError):
            decompose(Graph.from_edges(6, nx.octahedral_graph().edges()))
        with pytest.raises(ValueError, match="not universal"):
            decompose(wheel(7), apex=0)

    def test_default_apex_is_isomorphism_stable(self):
        rng = random.Random(1)
        d = decompose(ONE_CHORD5)
        for _ in range(10):
            e = decompose(shuffled(ONE_CHORD5, rng))
            assert e.s_prime == d.s_prime and e.a == d.a


class TestCountDegreeThree:
    def test_examples(self):
        assert count_degree_three(wheel(4)) == 4
        assert count_degree_three(ONE_CHORD5) == 2
        assert count_degree_three(TRIANGLE7) == 3


def chord_graph(n: int, chords) -> tuple[Graph, tuple]:
    return Graph.from_edges(n, chords), tuple(range(n))


class TestBlockProfile:
    def test_triangle_plus_isolated(self):
        assert block_cycle_profile(*chord_graph(6, [(0, 2), (2, 4), (0, 4)])) == {3: 1}

    def test_forest(self):
        assert block_cycle_profile(*chord_graph(8, [(0, 2), (0, 3), (3, 5), (3, 6)])) == {}

    def test_two_disjoint_triangles(self):
        chords = [(0, 2), (2, 4), (0, 4), (5, 7), (7, 9), (5, 9)]
        assert block_cycle_profile(*chord_graph(10, chords)) == {3: 2}

    def test_two_triangles_sharing_a_corner(self):
        chords = [(0, 2), (2, 4), (0, 4), (4, 6), (6, 8), (4, 8)]
        assert block_cycle_profile(*chord_graph(9, chords)) == {3: 2}

    def test_quadrilateral_block(self):
        chords = [(0, 2), (2, 4), (4, 6), (0, 6), (0, 4)]
        assert block_cycle_profile(*chord_graph(8, chords)) == {4: 1}

    def test_non_outerplanar_block(self):
        k4 = Graph.from_edges(8, [(0, 2), (0, 4), (0, 6), (2, 4), (2, 6), (4, 6)])
        with pytest.raises(ValueError, match="non-outerplanar block"):
            block_cycle_profile(k4, tuple(range(8)))


class TestBiconnectedComponents:
    def test_against_networkx(self):
        rng = random.Random(2)
        for _ in range(50):
            n = rng.randint(2, 12)
            h = nx.gnm_random_graph(n, rng.randint(0, 2 * n), seed=rng.randint(0, 10**6))
            g = Graph.from_edges(n, h.edges())
            ours = {frozenset(frozenset(e) for e in b) for b in biconnected_components(g)}
            theirs = {frozenset(frozenset(e) for e in b) for b in nx.biconnected_component_edges(h)}
            assert ours == theirs


class TestLemmaInequality:
    def test_triangle_tight(self):
        d = decompose(TRIANGLE7)
        assert lemma_block_bound(d) == 3 == d.a
        assert check_lemma_block_inequality(TRIANGLE7)

    def test_forest_tight(self):
        d = decompose(ONE_CHORD5)
        assert lemma_block_bound(d) == 2 == d.a
        assert check_lemma_block_inequality(ONE_CHORD5)

    def test_pyramid_rejected(self):
        with pytest.raises(LemmaPreconditionError, match="lemma precondition: G non-empty"):
            check_lemma_block_inequality(wheel(8))

    def test_holds_on_catalog(self, chord_catalog):
        for p in range(5, 11):
            for rec in chord_catalog.records(p=p):
                if rec.q > 2 * (p - 1):
                    assert check_lemma_block_inequality(rec.graph)


class TestCaterpillar:
    def test_star_plus_isolated(self):
        assert is_caterpillar_forest(Graph.from_edges(6, [(0, 1), (0, 2), (0, 3)]))

    def test_spider(self):
        spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        assert not is_caterpillar_forest(spider)

    def test_triangle(self):
        assert not is_caterpillar_forest(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))

    def test_paths_and_empty(self):
        assert is_caterpillar_forest(Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
        assert is_caterpillar_forest(Graph.empty(4))

    def test_against_networkx_definition(self):
        rng = random.Random(4)
        for _ in range(200):
            n = rng.randint(1, 10)
            t = nx.random_labeled_tree(n, seed=rng.randint(0, 10**6))
            spine = t.subgraph([v for v in t if t.degree(v) > 1])
            expected = n <= 2 or max((d for _, d in spine.degree()), default=0) <= 2
            assert is_caterpillar_forest(Graph.from_edges(n, t.edges())) == expected


class TestUnigraphicStructure:
    def test_p9(self, chord_catalog):
        report = check_unigraphic_structure(chord_catalog, 9)
        assert report.ok and report.checked > 0

    def test_p12_and_d1_instance(self, chord_catalog):
        assert check_unigraphic_structure(chord_catalog, 12).ok
        rec = realize_family(FamilyClass("D1", 12))
        d = decompose(rec.graph)
        assert check_triangle_structure(d) is None
        G = d.chord_graph
        big = [v for v in range(G.n) if G.degree(v) == 3]
        assert len(big) == 4
        # the three triangle corners and the pendant vertex
        assert sum(1 for v in big if G.adj[v] & sum(1 << u for u in big)) == 4

    def test_p6_exempt_forest(self, chord_catalog):
        report = check_unigraphic_structure(chord_catalog, 6)
        assert report.ok
        rec = realize_family(FamilyClass("E1", 6))
        d = decompose(rec.graph)
        assert d.a == 3 and cycle_rank(d.chord_graph) == 0

    def test_incomplete_catalog(self):
        with pytest.raises(IncompleteCatalogError):
            check_unigraphic_structure(Catalog(), 9)
