"""Independent slow checks used to validate the fast paths.

Planarity comes from networkx's left-right test, and every verdict it gives
is certified here: a planar answer must come with a rotation system whose
face count satisfies Euler's formula, a non-planar one with a subgraph that
reduces to K5 or K3,3.
"""

from __future__ import annotations

from itertools import permutations

import networkx as nx
import numpy as np

from .graph import Graph, NotConnectedError, is_three_connected, radius

ORACLE_MAX_ORDER = 10
BRUTE_FORCE_MAX_ORDER = 8


class OracleScaleError(ValueError):
    pass


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _count_faces(embedding: nx.PlanarEmbedding, nodes) -> int:
    succ = {}
    for v in nodes:
        ring = list(embedding.neighbors_cw_order(v))
        for i, u in enumerate(ring):
            succ[(v, u)] = ring[(i + 1) % len(ring)]
    seen = set()
    faces = 0
    for start in succ:
        if start in seen:
            continue
        faces += 1
        dart = start
        while dart not in seen:
            seen.add(dart)
            u, v = dart
            dart = (v, succ[(v, u)])
    return faces


def _reduces_to_kuratowski(sub: nx.Graph) -> bool:
    h = nx.Graph(sub)
    changed = True
    while changed:
        changed = False
        for v in list(h.nodes):
            d = h.degree(v)
            if d <= 1:
                h.remove_node(v)
                changed = True
            elif d == 2:
                a, b = list(h.neighbors(v))
                if h.has_edge(a, b):
                    return False
                h.remove_node(v)
                h.add_edge(a, b)
                changed = True
    n, m = h.number_of_nodes(), h.number_of_edges()
    degrees = {d for _, d in h.degree()}
    if n == 5 and m == 10:
        return True
    return n == 6 and m == 9 and degrees == {3} and nx.is_bipartite(h)


def is_planar_certified(g: Graph) -> bool:
    h = to_networkx(g)
    planar, cert = nx.check_planarity(h, counterexample=True)
    if planar:
        cert.check_structure()
        for comp in nx.connected_components(h):
            n = len(comp)
            m = h.subgraph(comp).number_of_edges()
            if n > 2 and _count_faces(cert, comp) != m - n + 2:
                raise AssertionError("planarity certificate violates Euler's formula")
        return True
    if not all(g.has_edge(u, v) for u, v in cert.edges):
        raise AssertionError("Kuratowski certificate is not a subgraph")
    if not _reduces_to_kuratowski(cert):
        raise AssertionError("Kuratowski certificate does not reduce to K5 or K3,3")
    return False


def is_radius_one_polytope_oracle(g: Graph) -> bool:
    """Radius one, 3-connected by pair deletion, and certified planar."""
    if g.n > ORACLE_MAX_ORDER:
        raise OracleScaleError("oracle scale exceeded")
    try:
        if radius(g) != 1:
            return False
    except NotConnectedError:
        return False
    return is_three_connected(g) and is_planar_certified(g)


def brute_force_code(g: Graph) -> bytes:
    """Minimum upper-triangle bit string over all n! relabelings."""
    n = g.n
    if n > BRUTE_FORCE_MAX_ORDER:
        raise OracleScaleError("oracle scale exceeded")
    if n < 2:
        return bytes([n])
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    perms = np.array(list(permutations(range(n))), dtype=np.intp)
    iu, ju = np.triu_indices(n, 1)
    weights = 1 << np.arange(len(iu) - 1, -1, -1, dtype=np.int64)
    bits = a[perms[:, iu], perms[:, ju]]
    best = int((bits @ weights).min())
    return bytes([n]) + best.to_bytes((len(iu) + 7) // 8, "big")
