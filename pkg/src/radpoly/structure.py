"""Apex / Hamiltonian cycle / chord graph decomposition and lemma checkers.

For a radius-one 3-polytope F with universal vertex ``apex``, F - apex is an
outerplanar 2-connected graph: its outer cycle H plus noncrossing chords.  The
chords form the chord graph G, whose degrees are the degrees in F minus 3.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .canon import canonical_code
from .graph import (
    DegreeSequence,
    Graph,
    _bits,
    chords_noncrossing,
    degree_sequence,
    is_outerplanar_2connected,
    is_radius_one_polytope,
    universal_vertices,
)

BlockProfile = dict  # cycle length i -> number of blocks bounded by an i-cycle


class NotRadiusOnePolytopeError(ValueError):
    pass


class LemmaPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class StructureDecomposition:
    """``h_cycle`` and ``chord_graph`` use the labels of ``g - apex``;
    ``labels[i]`` is the original label of base vertex i."""

    apex: int
    labels: tuple
    h_cycle: tuple
    chord_graph: Graph
    a: int
    s_prime: DegreeSequence

    @property
    def is_pyramid(self) -> bool:
        return self.chord_graph.m == 0


def count_degree_three(g: Graph) -> int:
    return sum(1 for row in g.adj if row.bit_count() == 3)


def decompose(g: Graph, apex: Optional[int] = None) -> StructureDecomposition:
    if not is_radius_one_polytope(g):
        raise NotRadiusOnePolytopeError("graph is not a radius-one 3-polytope")
    universal = universal_vertices(g)
    if apex is None:
        # Smallest canonical code of g - v; ties go to the smallest label.
        apex = min(universal, key=lambda v: (canonical_code(g.remove_vertex(v)), v))
    elif apex not in universal:
        raise ValueError(f"vertex {apex} is not universal")
    base = g.remove_vertex(apex)
    cycle = is_outerplanar_2connected(base)
    if cycle is None:
        # A different universal vertex made g pass; this one does not.
        raise ValueError(f"g - {apex} is not 2-connected outerplanar")
    n = base.n
    rows = list(base.adj)
    for i in range(n):
        u, v = cycle[i], cycle[(i + 1) % n]
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    chord_graph = Graph(n, tuple(rows))
    labels = tuple(v for v in range(g.n) if v != apex)
    return StructureDecomposition(
        apex=apex,
        labels=labels,
        h_cycle=cycle,
        chord_graph=chord_graph,
        a=count_degree_three(g),
        s_prime=degree_sequence(chord_graph),
    )


def decompositions(g: Graph) -> list[StructureDecomposition]:
    """One decomposition per universal vertex that admits one."""
    out = []
    for v in universal_vertices(g):
        if is_outerplanar_2connected(g.remove_vertex(v)) is not None:
            out.append(decompose(g, v))
    return out


def biconnected_components(g: Graph) -> list[frozenset]:
    """Blocks of ``g`` as edge sets (iterative Hopcroft-Tarjan).

    Isolated vertices belong to no block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(_bits(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(_bits(g.adj[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(frozenset(e))
                        if e == (u, v):
                            break
                    blocks.append(frozenset(block))
    return blocks


def _block_vertices(block: frozenset) -> list[int]:
    return sorted({v for e in block for v in e})


def block_cycle_profile(chord_graph: Graph, h_cycle: Sequence[int]) -> BlockProfile:
    """Count the blocks of G bounded by an i-cycle, for each i >= 3.

    Each such block is outerplanar; its boundary is its unique Hamiltonian
    cycle, which must also be the order its vertices appear along H.
    """
    profile: Counter = Counter()
    pos = {v: i for i, v in enumerate(h_cycle)}
    for block in biconnected_components(chord_graph):
        verts = _block_vertices(block)
        if len(verts) < 3:
            continue
        index = {v: i for i, v in enumerate(verts)}
        sub = Graph.from_edges(len(verts), [(index[a], index[b]) for a, b in map(tuple, block)])
        cert = is_outerplanar_2connected(sub)
        if cert is None:
            raise ValueError("non-outerplanar block")
        along_h = sorted(verts, key=pos.__getitem__)
        boundary = {frozenset((along_h[i], along_h[(i + 1) % len(along_h)])) for i in range(len(along_h))}
        if not boundary <= block:
            raise ValueError("non-outerplanar block")
        profile[len(verts)] += 1
    return dict(profile)


def lemma_block_bound(d: StructureDecomposition) -> int:
    """Right-hand side 2 + sum (i - 2) * B_G(i) of the degree-three lower bound."""
    profile = block_cycle_profile(d.chord_graph, d.h_cycle)
    return 2 + sum((i - 2) * k for i, k in profile.items())


def check_lemma_block_inequality(g: Graph) -> bool:
    """a >= 2 + sum (i - 2) B_G(i), checked for every universal apex."""
    decs = decompositions(g)
    if not decs or any(d.is_pyramid for d in decs):
        raise LemmaPreconditionError("lemma precondition: G non-empty")
    return all(d.a >= lemma_block_bound(d) for d in decs)


def _components(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def is_caterpillar_forest(g: Graph) -> bool:
    comps = _components(g)
    if g.m != g.n - len(comps):
        return False
    leaves = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            leaves |= 1 << v
    for comp in comps:
        if comp.bit_count() <= 2:
            continue
        spine = comp & ~leaves
        # Acyclic, so the spine is a tree; it is a path iff max degree <= 2.
        if any((g.adj[v] & spine).bit_count() > 2 for v in _bits(spine)):
            return False
    return True


def cycle_rank(g: Graph) -> int:
    return g.m - g.n + len(_components(g))


@dataclass
class StructureReport:
    p: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_triangle_structure(d: StructureDecomposition) -> Optional[str]:
    """None if G has one cycle, a triangle, and is connected once the
    degree-three vertices (isolated in G) are removed; else the reason."""
    G = d.chord_graph
    if cycle_rank(G) != 1:
        return f"G has cycle rank {cycle_rank(G)}"
    if block_cycle_profile(G, d.h_cycle) != {3: 1}:
        return "the cycle of G is not a triangle"
    isolated = [v for v in range(G.n) if not G.adj[v]]
    if len(isolated) != 3:
        return f"G has {len(isolated)} isolated vertices"
    nontrivial = [c for c in _components(G) if c.bit_count() > 1]
    if len(nontrivial) != 1:
        return "G minus its isolated vertices is disconnected"
    return None


def check_unigraphic_structure(catalog, p: int) -> StructureReport:
    """Structure of unigraphic realisations at order p, for every apex choice.

    a = 2: G is a caterpillar forest.  a = 3 and p >= 8: G has exactly one
    cycle, a triangle, and is connected after removing its isolated vertices.
    """
    from .sequences import group_by_sequence

    catalog.require_order(p)
    report = StructureReport(p)
    for group in group_by_sequence(catalog, p=p):
        if not group.unigraphic:
            continue
        a = group.seq.count(3)
        if a not in (2, 3):
            continue
        g = group.records[0].graph
        for d in decompositions(g):
            report.checked += 1
            if a == 2 and not is_caterpillar_forest(d.chord_graph):
                report.violations.append((group.seq, d.apex, "G is not a caterpillar forest"))
            elif a == 3 and p >= 8:
                reason = check_triangle_structure(d)
                if reason:
                    report.violations.append((group.seq, d.apex, reason))
    return report


def chord_set(d: StructureDecomposition) -> frozenset:
    """Chords of the decomposition as position pairs along ``h_cycle``."""
    pos = {v: i for i, v in enumerate(d.h_cycle)}
    return frozenset(tuple(sorted((pos[a], pos[b]))) for a, b in d.chord_graph.edges())


def noncrossing(d: StructureDecomposition) -> bool:
    return chords_noncrossing(d.h_cycle, d.chord_graph.edges())


@dataclass
class LemmaSweepReport:
    checked: int = 0
    skipped_pyramids: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def sweep_lemma_block_inequality(records) -> LemmaSweepReport:
    """Check the degree-three lower bound on every non-pyramid record, for
    every apex choice."""
    report = LemmaSweepReport()
    for rec in records:
        decs = decompositions(rec.graph)
        if any(d.is_pyramid for d in decs):
            report.skipped_pyramids += 1
            continue
        for d in decs:
            report.checked += 1
            bound = lemma_block_bound(d)
            if d.a < bound:
                report.violations.append((rec.code, d.apex, d.a, bound))
    return report
