"""Canonical certificates for small graphs.

The certificate of a graph is its order followed by the upper triangle of the
adjacency matrix under the relabeling that makes that triangle smallest, among
the leaves of a refinement search tree.  Only the relabeling is searched, so
two graphs get equal codes exactly when they are isomorphic.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, _bits

CanonicalCode = bytes


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Cells are split by neighbour counts into every other cell; new cells are
    ordered by those counts, never by vertex label.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for key in sorted(groups):
                    out.append(groups[key])
        cells = out
        if not changed:
            return cells


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    top = n - 1
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for i, v in enumerate(order):
        width = top - i
        if not width:
            break
        row = 0
        for w in _bits(adj[v]):
            j = pos[w]
            if j > i:
                row |= 1 << (top - j)
        code = (code << width) | row
    return code


def _individualize(cells: list[list[int]], k: int, v: int) -> list[list[int]]:
    cell = cells[k]
    rest = [u for u in cell if u != v]
    return cells[:k] + [[v], rest] + cells[k + 1:]


class _Orbits:
    """Union-find over vertices, used to skip automorphic siblings."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(order, code_bits)``: ``order[i]`` is the vertex placed at position i."""
    n = g.n
    adj = g.adj
    if n == 0:
        return [], 0
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    cells = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    best_code: int | None = None
    best_order: list[int] = []
    automorphisms: list[list[int]] = []

    def search(cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        nonlocal best_code, best_order
        k = next((i for i, c in enumerate(cells) if len(c) > 1), -1)
        if k < 0:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code:
                # best_order[i] -> order[i] is an automorphism
                gamma = [0] * n
                for a, b in zip(best_order, order):
                    gamma[a] = b
                automorphisms.append(gamma)
            return
        explored: list[int] = []
        for v in cells[k]:
            if explored:
                orbits = _Orbits(n)
                for gamma in automorphisms:
                    if all(gamma[x] == x for x in prefix):
                        for x in range(n):
                            orbits.union(x, gamma[x])
                root = orbits.find(v)
                if any(orbits.find(u) == root for u in explored):
                    continue
            explored.append(v)
            search(_refine(adj, _individualize(cells, k, v)), prefix + (v,))

    search(cells, ())
    assert best_code is not None
    return best_order, best_code


def code_bytes(n: int, bits: int) -> CanonicalCode:
    width = n * (n - 1) // 2
    return bytes([n]) + bits.to_bytes((width + 7) // 8, "big")


def canonical_code(g: Graph) -> CanonicalCode:
    _, bits = canonical_labeling(g)
    return code_bytes(g.n, bits)


def canonical_form(g: Graph) -> tuple[Graph, CanonicalCode]:
    """Relabel ``g`` canonically; the result's raw code equals its certificate."""
    order, bits = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm), code_bytes(g.n, bits)


def raw_code(g: Graph) -> CanonicalCode:
    """Certificate layout of ``g`` under its own labels (no search)."""
    return code_bytes(g.n, _leaf_code(g.adj, list(range(g.n))))
