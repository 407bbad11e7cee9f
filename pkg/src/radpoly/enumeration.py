"""Exhaustive, isomorphism-free generation of radius-one 3-polytopes.

Two independent routes produce the same catalog:

* chord diagrams -- every noncrossing set of chords of the (p-1)-cycle, with a
  universal apex on top;
* edge addition -- grow level q from level q-1 by adding one edge, seeding the
  wheel at every even q since wheels have no radius-one parent.

Canonical codes are the only dedup mechanism.  Output is sorted by code, so a
catalog is byte-identical for any worker count.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .canon import CanonicalCode, canonical_form
from .graph import DegreeSequence, Graph, degree_sequence, is_radius_one_polytope

log = logging.getLogger(__name__)


class CrossValidationError(AssertionError):
    pass


class IncompleteCatalogError(ValueError):
    pass


def size_range(p: int) -> range:
    """Sizes q a radius-one 3-polytope of order p can have."""
    return range(2 * (p - 1), 3 * p - 6 + 1)


def order_range(q: int) -> range:
    """Orders p a radius-one 3-polytope of size q can have."""
    return range(-(-(q + 6) // 3), q // 2 + 1 + 1)


@dataclass(frozen=True)
class ChordDiagram:
    n: int
    chords: frozenset

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("cycle length must be at least 3")
        norm = set()
        for chord in self.chords:
            i, j = sorted(chord)
            if not (0 <= i and j < self.n):
                raise ValueError(f"chord {chord} leaves the cycle")
            if j - i < 2 or (i == 0 and j == self.n - 1):
                raise ValueError(f"chord {chord} joins cycle neighbours")
            norm.add((i, j))
        for (a, b), (c, d) in combinations(sorted(norm), 2):
            if a < c < b < d:
                raise ValueError(f"chords {(a, b)} and {(c, d)} cross")
        object.__setattr__(self, "chords", frozenset(norm))

    @classmethod
    def of(cls, n: int, chords: Iterable[Iterable[int]] = ()) -> "ChordDiagram":
        return cls(n, frozenset(tuple(c) for c in chords))


@dataclass(frozen=True)
class PolytopeRecord:
    graph: Graph
    code: CanonicalCode
    p: int
    q: int
    seq: DegreeSequence

    @classmethod
    def from_graph(cls, g: Graph) -> "PolytopeRecord":
        canon, code = canonical_form(g)
        return cls._trusted(canon, code)

    @classmethod
    def _trusted(cls, canon: Graph, code: CanonicalCode) -> "PolytopeRecord":
        return cls(canon, code, canon.n, canon.m, degree_sequence(canon))


@dataclass
class Catalog:
    """Records keyed by ``(p, q)`` plus what is known to be complete.

    A cell is complete when its size level was fully generated, or its order
    was fully generated.
    """

    cells: dict = field(default_factory=dict)
    complete_levels: set = field(default_factory=set)
    complete_orders: set = field(default_factory=set)

    def add(self, rec: PolytopeRecord) -> bool:
        bucket = self.cells.setdefault((rec.p, rec.q), {})
        if rec.code in bucket:
            return False
        bucket[rec.code] = rec
        return True

    def cell(self, p: int, q: int) -> list[PolytopeRecord]:
        bucket = self.cells.get((p, q), {})
        return [bucket[c] for c in sorted(bucket)]

    def codes(self, p: int, q: int) -> set:
        return set(self.cells.get((p, q), {}))

    def keys(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.cells.items() if v)

    def records(self, p: Optional[int] = None, q: Optional[int] = None) -> Iterator[PolytopeRecord]:
        for key in self.keys():
            if (p is None or key[0] == p) and (q is None or key[1] == q):
                yield from self.cell(*key)

    def level(self, q: int) -> list[PolytopeRecord]:
        return list(self.records(q=q))

    def __len__(self) -> int:
        return sum(len(v) for v in self.cells.values())

    def is_complete(self, p: int, q: int) -> bool:
        return q in self.complete_levels or p in self.complete_orders

    def require_order(self, p: int) -> None:
        missing = [q for q in size_range(p) if not self.is_complete(p, q)]
        if missing:
            raise IncompleteCatalogError(f"catalog incomplete for order {p}: missing size {missing[0]}")

    def require_level(self, q: int) -> None:
        for p in order_range(q):
            if not self.is_complete(p, q):
                raise IncompleteCatalogError(f"catalog incomplete: missing level q={q} (order {p})")

    def merge(self, other: "Catalog") -> None:
        for rec in other.records():
            self.add(rec)
        self.complete_levels |= other.complete_levels
        self.complete_orders |= other.complete_orders


def wheel(p: int) -> Graph:
    """Pyramid over a (p-1)-cycle; the hub is vertex p-1."""
    if p < 4:
        raise ValueError("a wheel needs at least 4 vertices")
    return apex_graph(ChordDiagram.of(p - 1), check=False)


def _apex_edges(n: int, chords: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)]
    edges += list(chords)
    return edges


def apex_graph(d: ChordDiagram, check: bool = True) -> Graph:
    """Cycle ``0..n-1`` plus chords plus apex ``n`` joined to everything."""
    g = Graph.from_edges(d.n + 1, _apex_edges(d.n, sorted(d.chords)))
    if check:
        assert is_radius_one_polytope(g), "apex graph failed the polytope test"
    return g


# -- chord diagrams ---------------------------------------------------------


@lru_cache(maxsize=None)
def chord_table(n: int) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Chords of the n-cycle in (min, max) order and, per chord, the mask of
    later chords it does not cross."""
    chords = tuple(
        (i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)
    )
    compat = []
    for x, (a, b) in enumerate(chords):
        m = 0
        for y in range(x + 1, len(chords)):
            c, d = chords[y]
            if not (a < c < b < d or c < a < d < b):
                m |= 1 << y
        compat.append(m)
    return chords, tuple(compat)


def _subtree_masks(n: int, first: Optional[int], max_chords: int) -> list[int]:
    """Chord sets whose smallest chord index is ``first`` (``None``: empty set)."""
    _, compat = chord_table(n)
    if first is None:
        return [0]
    if max_chords < 1:
        return []
    out = []
    stack = [(1 << first, compat[first], 1)]
    while stack:
        mask, allowed, k = stack.pop()
        out.append(mask)
        if k == max_chords:
            continue
        rest = allowed
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            stack.append((mask | low, allowed & compat[c], k + 1))
    return out


def iter_chord_diagrams(n: int, max_chords: Optional[int] = None) -> Iterator[ChordDiagram]:
    """Every noncrossing chord set of the n-cycle, each exactly once."""
    chords, _ = chord_table(n)
    limit = n - 3 if max_chords is None else max_chords
    for first in [None, *range(len(chords))]:
        for mask in _subtree_masks(n, first, limit):
            yield ChordDiagram(n, frozenset(chords[c] for c in _bit_list(mask)))


def _bit_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@lru_cache(maxsize=None)
def _symmetry_tables(n: int) -> np.ndarray:
    """Byte lookup tables: ``T[s, k, b]`` is the image, as little-endian
    64-bit words, of byte value ``b`` at byte ``k`` under dihedral symmetry s."""
    chords, _ = chord_table(n)
    index = {c: x for x, c in enumerate(chords)}
    nbytes = (len(chords) + 7) // 8
    words = (len(chords) + 63) // 64
    syms = []
    for r in range(n):
        syms.append(lambda v, r=r: (v + r) % n)
        syms.append(lambda v, r=r: (r - v) % n)
    table = np.zeros((len(syms), nbytes, 256, words), dtype=np.uint64)
    for s, f in enumerate(syms):
        perm = [index[tuple(sorted((f(a), f(b))))] for a, b in chords]
        for k in range(nbytes):
            for b in range(256):
                img = 0
                for bit in range(8):
                    src = 8 * k + bit
                    if b >> bit & 1 and src < len(chords):
                        img |= 1 << perm[src]
                for w in range(words):
                    table[s, k, b, w] = (img >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return table


def orbit_minimal(n: int, masks: list[int]) -> np.ndarray:
    """Boolean array: which chord sets are the smallest in their dihedral orbit.

    A pure speed-up; canonical codes stay the authority on isomorphism.
    """
    if not masks:
        return np.zeros(0, dtype=bool)
    table = _symmetry_tables(n)
    nsym, nbytes, _, words = table.shape
    raw = b"".join(m.to_bytes(nbytes, "little") for m in masks)
    data = np.frombuffer(raw, dtype=np.uint8).reshape(len(masks), nbytes)

    def image(s: int) -> np.ndarray:
        acc = np.zeros((len(masks), words), dtype=np.uint64)
        for k in range(nbytes):
            acc |= table[s, k][data[:, k]]
        return acc

    base = image(0)  # symmetry 0 is the identity rotation
    keep = np.ones(len(masks), dtype=bool)
    for s in range(1, nsym):
        img = image(s)
        less = np.zeros(len(masks), dtype=bool)
        equal = np.ones(len(masks), dtype=bool)
        for w in reversed(range(words)):
            less |= equal & (img[:, w] < base[:, w])
            equal &= img[:, w] == base[:, w]
        keep &= ~less
    return keep


def _chord_task(args: tuple[int, Optional[int], int]) -> list[tuple[bytes, tuple[int, ...]]]:
    n, first, max_chords = args
    chords, _ = chord_table(n)
    masks = _subtree_masks(n, first, max_chords)
    keep = orbit_minimal(n, masks)
    out = []
    for mask, flag in zip(masks, keep):
        if not flag:
            continue
        g = Graph.from_edges(n + 1, _apex_edges(n, [chords[c] for c in _bit_list(mask)]))
        canon, code = canonical_form(g)
        out.append((code, canon.adj))
    return out


def _run(task: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [task(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task, items, chunksize=max(1, len(items) // (4 * jobs))))


def enumerate_chord_diagrams(p: int, jobs: int = 1, q_max: Optional[int] = None) -> Catalog:
    """All radius-one 3-polytopes of order p (optionally only sizes <= q_max).

    Work is split by the first chord of each diagram.
    """
    if not 4 <= p <= 24:
        raise ValueError("order must be in 4..24")
    n = p - 1
    max_chords = n - 3
    if q_max is not None:
        max_chords = min(max_chords, q_max - 2 * n)
    cat = Catalog()
    if max_chords < 0:
        return cat
    chords, _ = chord_table(n)
    tasks = [(n, None, max_chords)] + [(n, c, max_chords) for c in range(len(chords))]
    for batch in _run(_chord_task, tasks, jobs):
        for code, adj in batch:
            cat.add(PolytopeRecord._trusted(Graph(p, adj), code))
    if max_chords == n - 3:
        cat.complete_orders.add(p)
    log.info("order %d: %d polytopes from chord diagrams", p, len(cat))
    return cat


def enumerate_chords_up_to(p_max: int, jobs: int = 1) -> Catalog:
    cat = Catalog()
    for p in range(4, p_max + 1):
        cat.merge(enumerate_chord_diagrams(p, jobs=jobs))
    return cat


def enumerate_chords_by_size(q_max: int, jobs: int = 1) -> Catalog:
    """Every polytope with at most q_max edges, via chord diagrams."""
    cat = Catalog()
    p = 4
    while 2 * (p - 1) <= q_max:
        cat.merge(enumerate_chord_diagrams(p, jobs=jobs, q_max=q_max))
        p += 1
    cat.complete_levels |= set(range(6, q_max + 1))
    return cat


# -- edge addition ----------------------------------------------------------


def _children(args: tuple[tuple[tuple[int, ...], ...], int]) -> list[tuple[bytes, tuple[int, ...]]]:
    parents, p = args
    out = {}
    for adj in parents:
        g = Graph(p, adj)
        if g.m + 1 > 3 * p - 6:
            continue
        for u, v in g.non_edges():
            child = g.add_edge(u, v)
            if is_radius_one_polytope(child):
                canon, code = canonical_form(child)
                out.setdefault(code, canon.adj)
    return sorted(out.items())


def enumerate_by_edge_addition(
    q_max: int,
    p_max: Optional[int] = None,
    jobs: int = 1,
    resume: Optional[Catalog] = None,
    on_level: Optional[Callable[[int, list[PolytopeRecord]], None]] = None,
) -> Catalog:
    """Levels L(6)..L(q_max), each built from the previous one.

    With ``p_max`` only orders up to p_max are grown; edge addition never
    changes the order, so those orders stay exhaustive.  ``resume`` is a
    catalog whose highest complete level is taken as the starting point.
    ``on_level`` is called after each newly computed level.
    """
    if q_max < 6:
        raise ValueError("q_max must be at least 6")

    def allowed(p: int) -> bool:
        return p_max is None or p <= p_max

    cat = Catalog()
    start = 6
    if resume is not None and resume.complete_levels:
        top = max(resume.complete_levels)
        done = set(range(6, top + 1))
        if done <= resume.complete_levels:
            for q in sorted(done):
                for rec in resume.level(q):
                    if allowed(rec.p):
                        cat.add(rec)
                log.info("level q=%d: loaded %d polytopes", q, len(cat.level(q)))
            cat.complete_levels |= done
            start = top + 1
    if start == 6:
        k4 = PolytopeRecord.from_graph(wheel(4))
        cat.add(k4)
        cat.complete_levels.add(6)
        log.info("level q=6: computed 1 polytopes")
        if on_level:
            on_level(6, [k4])
        start = 7

    for q in range(start, q_max + 1):
        parents = cat.level(q - 1)
        by_order: dict[int, list] = {}
        for rec in parents:
            if allowed(rec.p):
                by_order.setdefault(rec.p, []).append(rec.graph.adj)
        tasks = []
        chunk = max(1, sum(len(v) for v in by_order.values()) // max(1, 4 * jobs))
        for p in sorted(by_order):
            adjs = by_order[p]
            for i in range(0, len(adjs), chunk):
                tasks.append((tuple(adjs[i:i + chunk]), p))
        for batch in _run(_children, tasks, jobs):
            for code, adj in batch:
                g = Graph(len(adj), adj)
                cat.add(PolytopeRecord._trusted(g, code))
        if q % 2 == 0 and allowed(q // 2 + 1):
            cat.add(PolytopeRecord.from_graph(wheel(q // 2 + 1)))
        cat.complete_levels.add(q)
        level = cat.level(q)
        log.info("level q=%d: computed %d polytopes", q, len(level))
        if on_level:
            on_level(q, level)

    top_order = q_max // 2 + 1 if p_max is None else p_max
    cat.complete_orders = {p for p in range(4, top_order + 1) if 3 * p - 6 <= q_max}
    if p_max is not None:
        # Restricted runs are exhaustive only below the order cap.
        cat.complete_levels = {
            q for q in cat.complete_levels if all(p <= p_max for p in order_range(q))
        }
    return cat


@dataclass
class CrossValidationReport:
    p_max: int
    cells_checked: int
    discrepancies: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def describe(self) -> str:
        lines = [f"cross-validation p<={self.p_max}: {self.cells_checked} cells, "
                 f"{len(self.discrepancies)} discrepancies"]
        for (p, q), (only_chords, only_edges) in sorted(self.discrepancies.items()):
            lines.append(f"  (p={p}, q={q}) chords-only: {sorted(c.hex() for c in only_chords)}")
            lines.append(f"  (p={p}, q={q}) edges-only: {sorted(c.hex() for c in only_edges)}")
        return "\n".join(lines)


def compare_catalogs(chords: Catalog, edges: Catalog, p_max: int) -> CrossValidationReport:
    report = CrossValidationReport(p_max, 0)
    for p in range(4, p_max + 1):
        for q in size_range(p):
            a, b = chords.codes(p, q), edges.codes(p, q)
            report.cells_checked += 1
            if a != b:
                report.discrepancies[(p, q)] = (a - b, b - a)
    return report


def cross_validate(p_max: int, jobs: int = 1) -> CrossValidationReport:
    """Run both generators for orders <= p_max and compare code sets per cell.

    Raises :class:`CrossValidationError` listing both code sets on mismatch.
    """
    chords = enumerate_chords_up_to(p_max, jobs=jobs)
    edges = enumerate_by_edge_addition(3 * p_max - 6 if p_max > 4 else 6, p_max=p_max, jobs=jobs)
    report = compare_catalogs(chords, edges, p_max)
    if not report.ok:
        raise CrossValidationError(report.describe())
    return report
