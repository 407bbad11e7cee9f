"""Bitset graphs and the membership predicates for radius-one 3-polytopes.

A :class:`Graph` stores one integer bitmask per vertex.  Everything here is a
pure function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

MAX_ORDER = 24

DegreeSequence = Tuple[int, ...]


class NotConnectedError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        if self.n > MAX_ORDER:
            raise ValueError(f"order {self.n} exceeds the cap of {MAX_ORDER}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            rest = row
            while rest:
                low = rest & -rest
                if not self.adj[low.bit_length() - 1] >> v & 1:
                    raise ValueError("adjacency is not symmetric")
                rest ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) leaves 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        """Delete ``v`` and shift higher labels down by one."""
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adj):
            if u != v:
                rows.append((row & low) | (row >> (v + 1) << v))
        return Graph(self.n - 1, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``u`` becomes ``perm[u]``."""
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            new = 0
            for w in _bits(row):
                new |= 1 << perm[w]
            rows[perm[u]] = new
        return Graph(self.n, tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def degree_sequence(g: Graph) -> DegreeSequence:
    return tuple(sorted((row.bit_count() for row in g.adj), reverse=True))


def eccentricity(g: Graph, v: int) -> int:
    seen = 1 << v
    frontier = 1 << v
    full = (1 << g.n) - 1
    depth = 0
    while seen != full:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        if not nxt:
            raise NotConnectedError("not connected")
        seen |= nxt
        frontier = nxt
        depth += 1
    return depth


def radius(g: Graph) -> int:
    if g.n == 0:
        raise NotConnectedError("not connected")
    return min(eccentricity(g, v) for v in range(g.n))


def universal_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.adj[v].bit_count() == g.n - 1]


def _connected(adj: Sequence[int], alive: int) -> bool:
    if not alive:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= adj[u]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen == alive


def is_connected(g: Graph) -> bool:
    return _connected(g.adj, (1 << g.n) - 1)


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        return False
    full = (1 << g.n) - 1
    if not _connected(g.adj, full):
        return False
    return all(_connected(g.adj, full & ~(1 << v)) for v in range(g.n))


def is_three_connected(g: Graph) -> bool:
    """Brute force: every pair of deleted vertices leaves a connected graph."""
    if g.n < 4:
        return False
    full = (1 << g.n) - 1
    if not _connected(g.adj, full):
        return False
    for u, v in combinations(range(g.n), 2):
        if not _connected(g.adj, full & ~(1 << u) & ~(1 << v)):
            return False
    return True


def chords_noncrossing(order: Sequence[int], chords: Iterable[tuple[int, int]]) -> bool:
    """True when no two chords interleave in the cyclic vertex ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    spans = sorted(tuple(sorted((pos[a], pos[b]))) for a, b in chords)
    for (a, b), (c, d) in combinations(spans, 2):
        if a < c < b < d or c < a < d < b:
            return False
    return True


def is_outerplanar_2connected(g: Graph) -> Optional[Tuple[int, ...]]:
    """Outer-face cycle of a 2-connected outerplanar graph, else ``None``.

    Backtracking Hamiltonian-cycle search from vertex 0.  Chords are checked
    for crossings as soon as both endpoints are placed, and a placed vertex
    that ends up strictly inside a chord may not have unplaced neighbours.
    The returned order starts at 0 and has ``order[1] < order[-1]``.
    """
    n = g.n
    if n < 3:
        return None
    if g.m > 2 * n - 3:
        return None
    adj = g.adj
    if any(row.bit_count() < 2 for row in adj):
        return None
    if n == 3:
        return (0, 1, 2)

    order = [0]
    pos = [-1] * n
    pos[0] = 0
    spans: list[tuple[int, int]] = []
    full = (1 << n) - 1

    def extend(placed: int, closed: int) -> Optional[Tuple[int, ...]]:
        t = len(order)
        last = order[-1]
        if t == n:
            if not adj[last] & 1:
                return None
            cyc = tuple(order)
            return cyc if cyc[1] < cyc[-1] else (0,) + tuple(reversed(cyc[1:]))
        unplaced = full & ~placed
        for w in _bits(adj[last] & unplaced):
            # Chords from w back to already placed vertices other than last.
            back = adj[w] & placed & ~(1 << last)
            if t == n - 1:
                back &= ~1  # w-0 is the closing cycle edge
            new_spans = []
            new_closed = closed
            ok = True
            for u in _bits(back):
                a = pos[u]
                for c, d in spans:
                    if c < a < d:
                        ok = False
                        break
                if not ok:
                    break
                new_spans.append((a, t))
                new_closed |= _mask_between(order, a, t)
            if not ok:
                continue
            rest = unplaced & ~(1 << w)
            bad = False
            for x in _bits(new_closed & ~closed):
                if adj[x] & rest:
                    bad = True
                    break
            if bad:
                continue
            order.append(w)
            pos[w] = t
            spans.extend(new_spans)
            found = extend(placed | (1 << w), new_closed)
            if found is not None:
                return found
            del spans[len(spans) - len(new_spans):]
            pos[w] = -1
            order.pop()
        return None

    return extend(1, 0)


def _mask_between(order: Sequence[int], a: int, t: int) -> int:
    mask = 0
    for i in range(a + 1, t):
        mask |= 1 << order[i]
    return mask


def is_radius_one_polytope(g: Graph) -> bool:
    """Radius-one 3-polytope test via an outerplanar base under a universal vertex."""
    if g.n < 4:
        return False
    if g.m > 3 * g.n - 6:
        return False
    for v in universal_vertices(g):
        if is_outerplanar_2connected(g.remove_vertex(v)) is not None:
            return True
    return False
