from __future__ import annotations

import networkx as nx
import pytest

from radpoly.enumeration import ChordDiagram, apex_graph, wheel
from radpoly.graph import (
    Graph,
    NotConnectedError,
    chords_noncrossing,
    degree_sequence,
    eccentricity,
    is_connected,
    is_outerplanar_2connected,
    is_radius_one_polytope,
    is_three_connected,
    is_two_connected,
    radius,
    universal_vertices,
)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


P5_9 = apex_graph(ChordDiagram.of(4, [(0, 2)]))


class TestGraphType:
    def test_from_edges_and_queries(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2)])
        assert g.m == 2
        assert g.has_edge(1, 0) and not g.has_edge(0, 2)
        assert g.degree(1) == 2
        assert sorted(g.neighbors(1)) == [0, 2]
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_rejects_loops_and_asymmetry(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_add_remove_edge(self):
        g = cycle(4)
        h = g.add_edge(0, 2)
        assert h.m == 5 and g.m == 4
        assert h.remove_edge(0, 2) == g

    def test_remove_vertex_shifts_labels(self):
        g = Graph.from_edges(4, [(0, 3), (1, 2), (2, 3)])
        h = g.remove_vertex(1)
        assert h.n == 3
        assert sorted(h.edges()) == [(0, 2), (1, 2)]

    def test_relabel(self):
        g = Graph.from_edges(3, [(0, 1)])
        h = g.relabel([2, 0, 1])
        assert sorted(h.edges()) == [(0, 2)]


class TestDegreeSequence:
    def test_k4(self):
        assert degree_sequence(wheel(4)) == (3, 3, 3, 3)

    def test_wheel7(self):
        assert degree_sequence(wheel(7)) == (6, 3, 3, 3, 3, 3, 3)

    def test_apex_c4_one_chord(self):
        assert degree_sequence(P5_9) == (4, 4, 4, 3, 3)


class TestRadius:
    def test_k4(self):
        assert all(eccentricity(wheel(4), v) == 1 for v in range(4))
        assert radius(wheel(4)) == 1

    def test_c6(self):
        assert radius(cycle(6)) == 3

    def test_universal_vertex_gives_radius_one(self):
        g = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
        assert radius(g) == 1

    def test_disconnected_raises(self):
        with pytest.raises(NotConnectedError, match="not connected"):
            radius(Graph.from_edges(4, [(0, 1), (2, 3)]))
        assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


class TestUniversalVertices:
    def test_k4(self):
        assert universal_vertices(wheel(4)) == [0, 1, 2, 3]

    def test_wheel7_hub_first(self):
        g = wheel(7).relabel([1, 2, 3, 4, 5, 6, 0])
        assert universal_vertices(g) == [0]

    def test_p5_q9_has_three(self):
        assert len(universal_vertices(P5_9)) == 3


class TestConnectivity:
    def test_k4(self):
        assert is_three_connected(wheel(4))

    def test_c5(self):
        assert is_two_connected(cycle(5))
        assert not is_three_connected(cycle(5))

    def test_wheel8(self):
        assert is_three_connected(wheel(8))

    def test_agrees_with_networkx(self):
        for h in (nx.petersen_graph(), nx.cycle_graph(6), nx.complete_bipartite_graph(3, 3), nx.ladder_graph(4)):
            g = from_nx(h)
            assert is_three_connected(g) == (nx.node_connectivity(h) >= 3)
            assert is_two_connected(g) == nx.is_biconnected(h)


class TestOuterplanar:
    def test_c5_certificate_is_the_cycle(self):
        order = is_outerplanar_2connected(cycle(5))
        assert order is not None
        assert sorted(order) == list(range(5))
        assert all(cycle(5).has_edge(order[i], order[(i + 1) % 5]) for i in range(5))

    def test_k4_not_outerplanar(self):
        assert is_outerplanar_2connected(wheel(4)) is None

    def test_c6_with_fan_chords(self):
        g = cycle(6).add_edge(0, 2).add_edge(0, 3)
        order = is_outerplanar_2connected(g)
        assert order is not None
        assert tuple(order) == (0, 1, 2, 3, 4, 5)

    def test_crossing_chords_rejected(self):
        assert is_outerplanar_2connected(cycle(6).add_edge(0, 3).add_edge(1, 4)) is None

    def test_not_two_connected(self):
        assert is_outerplanar_2connected(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])) is None
        assert is_outerplanar_2connected(from_nx(nx.complete_bipartite_graph(2, 3))) is None

    def test_noncrossing_helper(self):
        assert chords_noncrossing(range(6), [(0, 2), (0, 3)])
        assert not chords_noncrossing(range(6), [(0, 3), (1, 4)])


class TestRadiusOnePolytope:
    def test_k4(self):
        assert is_radius_one_polytope(wheel(4))

    def test_octahedron(self):
        assert not is_radius_one_polytope(from_nx(nx.octahedral_graph()))

    def test_apex_over_crossing_chords(self):
        base = cycle(6).add_edge(0, 3).add_edge(1, 4)
        g = Graph.from_edges(7, list(base.edges()) + [(i, 6) for i in range(6)])
        assert not is_radius_one_polytope(g)

    def test_k5_and_wheel_minus_spoke(self):
        assert not is_radius_one_polytope(complete(5))
        assert not is_radius_one_polytope(wheel(6).remove_edge(0, 5))

    def test_wheels(self):
        for p in range(4, 25):
            assert radius(wheel(p)) == 1
            assert is_radius_one_polytope(wheel(p))
