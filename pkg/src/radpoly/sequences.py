"""Degree sequences of radius-one 3-polytopes: families, realisation, unigraphicity.

Families with two degree-three vertices (A1-A4) and with three (B1, C1, D1,
plus the two sporadic sequences E1 = 5,4^2,3^3 and E2 = 6,5^3,3^3).  Pyramid
is the wheel, p-1, 3^(p-1).

Unigraphic means "exactly one realisation among radius-one 3-polytopes".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .canon import CanonicalCode
from .enumeration import (
    Catalog,
    ChordDiagram,
    PolytopeRecord,
    apex_graph,
    chord_table,
    size_range,
)
from .graph import DegreeSequence

TWO_THREES = ("A1", "A2", "A3", "A4")
THREE_THREES = ("B1", "C1", "D1", "E1", "E2")
TAGS = TWO_THREES + THREE_THREES + ("Pyramid",)


class FamilyParameterError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class FamilyClass:
    tag: str
    p: int
    x: Optional[int] = None

    def __str__(self) -> str:
        if self.x is None:
            return f"{self.tag} p={self.p}"
        return f"{self.tag} p={self.p} x={self.x}"


def _require(ok: bool, fc: FamilyClass, condition: str) -> None:
    if not ok:
        raise FamilyParameterError(f"{fc}: violates {condition}")


def validate(fc: FamilyClass) -> None:
    tag, p, x = fc.tag, fc.p, fc.x
    if tag not in TAGS:
        raise FamilyParameterError(f"unknown family {tag!r}")
    needs_x = tag in ("A3", "A4", "B1")
    _require((x is not None) == needs_x, fc, "x given exactly for A3, A4, B1")
    if tag == "A1":
        _require(p >= 5, fc, "p >= 5")
        _require(p % 2 == 1, fc, "p odd")
    elif tag == "A2":
        _require(p >= 8, fc, "p >= 8")
    elif tag == "A3":
        _require(p >= 6, fc, "p >= 6")
        _require(x >= 2, fc, "x >= 2")
        _require((p - 5) % (x - 1) == 0, fc, "(p-5)/(x-1) a positive integer")
    elif tag == "A4":
        _require(p >= 8, fc, "p >= 8")
        _require((p - 1) // 2 <= x <= p - 5, fc, "floor((p-1)/2) <= x <= p-5")
    elif tag == "B1":
        _require(p >= 10, fc, "p >= 10")
        _require(3 <= x <= (p - 4) // 2, fc, "3 <= x <= floor((p-4)/2)")
    elif tag == "C1":
        _require(p >= 8, fc, "p >= 8")
    elif tag == "D1":
        _require(p >= 12, fc, "p >= 12")
        _require(p % 4 == 0, fc, "p = 0 mod 4")
    elif tag == "E1":
        _require(p == 6, fc, "p = 6")
    elif tag == "E2":
        _require(p == 7, fc, "p = 7")
    elif tag == "Pyramid":
        _require(p >= 4, fc, "p >= 4")


def family_sequence(fc: FamilyClass) -> DegreeSequence:
    validate(fc)
    p, x = fc.p, fc.x
    tag = fc.tag
    if tag == "A1":
        body = [4] * (p - 3) + [3, 3]
    elif tag == "A2":
        body = [p - 3] + [4] * (p - 4) + [3, 3]
    elif tag == "A3":
        k = (p - 5) // (x - 1)
        body = [x + 3] * k + [4] * ((p - 5) * (x - 2) // (x - 1) + 2) + [3, 3]
    elif tag == "A4":
        body = [x + 3, p - x] + [4] * (p - 5) + [3, 3]
    elif tag == "B1":
        body = [x + 3, x + 3, p - 1 - 2 * x + 3] + [4] * (p - 7) + [3, 3, 3]
    elif tag == "C1":
        body = [6] + [5] * (p - 6) + [4, 3, 3, 3]
    elif tag == "D1":
        body = [p // 4 + 3] * 4 + [4] * (p - 8) + [3, 3, 3]
    elif tag == "E1":
        body = [4, 4, 3, 3, 3]
    elif tag == "E2":
        body = [5, 5, 5, 3, 3, 3]
    else:
        body = [3] * (p - 1)
    seq = tuple(sorted([p - 1] + body, reverse=True))
    assert len(seq) == p and sum(seq) % 2 == 0
    return seq


def admissible(p: int, tags: Sequence[str] = TAGS) -> Iterator[FamilyClass]:
    """Every valid family parameter choice at order p."""
    for tag in tags:
        xs: Sequence[Optional[int]] = [None]
        if tag in ("A3", "A4", "B1"):
            xs = range(2, p + 1)
        for x in xs:
            fc = FamilyClass(tag, p, x)
            try:
                validate(fc)
            except FamilyParameterError:
                continue
            yield fc


def families_for(a_value: int) -> tuple[str, ...]:
    if a_value == 2:
        return TWO_THREES
    if a_value == 3:
        return THREE_THREES
    raise ValueError("only a = 2 or a = 3 is classified")


def classify_sequence(s: Sequence[int]) -> list[FamilyClass]:
    s = tuple(sorted(s, reverse=True))
    p = len(s)
    if p < 4 or s[0] != p - 1:
        return []
    return [fc for fc in admissible(p) if family_sequence(fc) == s]


# -- realisation ------------------------------------------------------------


def _diagrams_with_degrees(n: int, targets: Counter, n_chords: int) -> Iterator[list[tuple[int, int]]]:
    """Noncrossing chord sets of the n-cycle whose chord-degree multiset is
    ``targets``.  Chords are added in (min, max) order, so a vertex's degree
    is final once the search moves past it as a minimum endpoint."""
    chords, compat = chord_table(n)
    top = max(targets) if targets else 0
    deg = [0] * n
    remaining = Counter(targets)
    chosen: list[int] = []

    def finalize(lo: int, hi: int) -> Optional[list[int]]:
        used = []
        for v in range(lo, hi):
            d = deg[v]
            if remaining[d] <= 0:
                for u in used:
                    remaining[u] += 1
                return None
            remaining[d] -= 1
            used.append(d)
        return used

    def rec(allowed: int, done_upto: int) -> Iterator[list[tuple[int, int]]]:
        if len(chosen) == n_chords:
            used = finalize(done_upto, n)
            if used is not None:
                yield [chords[c] for c in chosen]
                for d in used:
                    remaining[d] += 1
            return
        rest = allowed
        while rest:
            low = rest & -rest
            c = low.bit_length() - 1
            rest ^= low
            a, b = chords[c]
            used = finalize(done_upto, a)
            if used is None:
                # Later chords only finalize more vertices.
                return
            if deg[a] < top and deg[b] < top:
                deg[a] += 1
                deg[b] += 1
                chosen.append(c)
                yield from rec(allowed & compat[c], a)
                chosen.pop()
                deg[a] -= 1
                deg[b] -= 1
            for d in used:
                remaining[d] += 1

    yield from rec((1 << len(chords)) - 1, 0)


def realize_sequence(s: Sequence[int]) -> list[PolytopeRecord]:
    """All radius-one 3-polytopes with degree sequence s, sorted by code."""
    s = tuple(sorted(s, reverse=True))
    p = len(s)
    if p < 4 or p > 24 or s[0] != p - 1 or s[-1] < 3 or sum(s) % 2:
        return []
    q = sum(s) // 2
    if q not in size_range(p):
        return []
    n = p - 1
    targets = Counter(d - 3 for d in s[1:])
    found: dict[CanonicalCode, PolytopeRecord] = {}
    for chords in _diagrams_with_degrees(n, targets, q - 2 * n):
        rec = PolytopeRecord.from_graph(apex_graph(ChordDiagram.of(n, chords), check=False))
        found.setdefault(rec.code, rec)
    return [found[c] for c in sorted(found)]


def family_diagram(fc: FamilyClass) -> ChordDiagram:
    """A chord diagram on the (p-1)-cycle realising the family's chord graph."""
    validate(fc)
    p, x, tag = fc.p, fc.x, fc.tag
    n = p - 1
    if tag == "Pyramid":
        return ChordDiagram.of(n)
    if tag == "E1":
        return ChordDiagram.of(5, [(0, 2)])
    if tag == "E2":
        return ChordDiagram.of(6, [(0, 2), (2, 4), (0, 4)])
    if tag == "A1":
        # parallel chords, isolated vertices 0 and n/2
        return ChordDiagram.of(n, [(i, n - i) for i in range(1, n // 2)])
    if tag == "A2":
        # 0: isolated, 1: star centre, 2-4: the K2 around isolated 3, 5..: leaves
        return ChordDiagram.of(n, [(2, 4)] + [(1, j) for j in range(5, n)])
    if tag in ("A3", "A4"):
        if tag == "A3":
            spine = [x] * ((p - 5) // (x - 1))
        else:
            spine = [x, p - 3 - x]
        return _caterpillar_diagram(spine)
    if tag == "B1":
        y = p - 1 - 2 * x
        return _triangle_with_stars(n, [x - 2, x - 2, y - 2])
    if tag == "C1":
        return _triangle_with_path(n, p - 7)
    if tag == "D1":
        return _triangle_with_pendant(n, p // 4)
    raise AssertionError(tag)


def _caterpillar_diagram(spine: Sequence[int]) -> ChordDiagram:
    """Caterpillar with spine degrees ``spine`` plus two isolated vertices.

    Cycle order for spine c1..cl with leaf sets Q1..Ql: Q1, c1, Q2, c3, Q4, ...
    down one side and back up the other to c2, so spine edges zigzag and the
    leaves of c_i sit across from it.  Isolated vertices go right before c1
    and next to cl, so no chord joins cycle neighbours.
    """
    ell = len(spine)
    if ell == 1:
        tokens = [("Q", 1), ("z", 0), ("c", 1), ("z", 1)]
    else:
        down = [("Q", 1), ("z", 0), ("c", 1)]
        for i in range(3, ell + 1, 2):
            down += [("Q", i - 1), ("c", i)]
        if ell % 2 == 0:
            # ... c_{l-1}, Q_l, z, c_l, Q_{l-1}, c_{l-2}, ...
            down += [("Q", ell), ("z", 1), ("c", ell)]
            up_start = ell - 2
        else:
            # ... Q_{l-1}, c_l, z, Q_l, c_{l-1}, ...
            down += [("z", 1), ("Q", ell), ("c", ell - 1)]
            up_start = ell - 3
        up = []
        for i in range(up_start, 1, -2):
            up += [("Q", i + 1), ("c", i)]
        tokens = down + up
    if ell == 1:
        leaves = {1: spine[0]}
    else:
        leaves = {i: spine[i - 1] - (1 if i in (1, ell) else 2) for i in range(1, ell + 1)}
    pos = 0
    where: dict[int, int] = {}
    leaf_pos: dict[int, list[int]] = {i: [] for i in leaves}
    for kind, i in tokens:
        if kind == "c":
            where[i] = pos
            pos += 1
        elif kind == "z":
            pos += 1
        else:
            leaf_pos[i] = list(range(pos, pos + leaves[i]))
            pos += leaves[i]
    chords = [(where[i], where[i + 1]) for i in range(1, ell)]
    chords += [(where[i], j) for i in leaves for j in leaf_pos[i]]
    return ChordDiagram.of(pos, [tuple(sorted(c)) for c in chords])


def _triangle_with_stars(n: int, extra: Sequence[int]) -> ChordDiagram:
    """Triangle u, v, w with ``extra[k]`` leaves per corner; each side of the
    triangle carries one isolated vertex next to the corner it follows."""
    chords = []
    corners = []
    pos = 0
    for k in range(3):
        corners.append(pos)
        leaves = list(range(pos + 2, pos + 2 + extra[k]))
        chords += [(pos, j) for j in leaves]
        pos = pos + 2 + extra[k]
    assert pos == n
    chords += [(corners[0], corners[1]), (corners[1], corners[2]), (corners[0], corners[2])]
    return ChordDiagram.of(n, [tuple(sorted(c)) for c in chords])


def _triangle_with_path(n: int, length: int) -> ChordDiagram:
    """Triangle u, v, w and a path of ``length`` edges hanging off u.

    The path zigzags across the u-v side; its middle gap holds the isolated
    vertex of that side.
    """
    u = 0
    arc = list(range(1, length + 2))  # length + 1 slots between u and v
    v = length + 2
    w = v + 2
    assert w + 2 == n
    path = [u]
    lo, hi = 0, len(arc) - 1
    for step in range(length):
        if step % 2 == 0:
            path.append(arc[hi])
            hi -= 1
        else:
            path.append(arc[lo])
            lo += 1
    chords = [tuple(sorted(e)) for e in zip(path, path[1:])]
    chords += [(u, v), (v, w), (u, w)]
    return ChordDiagram.of(n, chords)


def _triangle_with_pendant(n: int, d: int) -> ChordDiagram:
    """Triangle u, v, w, pendant c on u, all four of chord degree d.

    Cycle order: u, leaves of c, z, c, leaves of u, v, z, leaves of v, w, z,
    leaves of w.
    """
    u = 0
    qc = list(range(1, d))  # d - 1 leaves of c
    c = d + 1
    qu = list(range(c + 1, c + 1 + d - 3))
    v = c + 1 + (d - 3)
    qv = list(range(v + 2, v + 2 + d - 2))
    w = v + 2 + d - 2
    qw = list(range(w + 2, w + 2 + d - 2))
    assert w + 2 + d - 2 == n
    chords = [(u, c), (u, v), (v, w), (u, w)]
    chords += [(c, j) for j in qc] + [(u, j) for j in qu]
    chords += [(v, j) for j in qv] + [(w, j) for j in qw]
    return ChordDiagram.of(n, [tuple(sorted(e)) for e in chords])


def realize_family(fc: FamilyClass) -> PolytopeRecord:
    """Build the family's polytope directly and check it against search.

    Raises AssertionError when the construction disagrees with the family
    sequence or with the unique realisation found by ``realize_sequence``.
    """
    seq = family_sequence(fc)
    rec = PolytopeRecord.from_graph(apex_graph(family_diagram(fc)))
    if rec.seq != seq:
        raise AssertionError(f"{fc}: construction has sequence {rec.seq}, expected {seq}")
    found = realize_sequence(seq)
    if [r.code for r in found] != [rec.code]:
        raise AssertionError(f"{fc}: {len(found)} realisations found, construction not unique")
    return rec


# -- catalogs ---------------------------------------------------------------


@dataclass(frozen=True)
class SequenceGroup:
    seq: DegreeSequence
    p: int
    q: int
    records: tuple

    @property
    def realisations(self) -> list[CanonicalCode]:
        return [r.code for r in self.records]

    @property
    def unigraphic(self) -> bool:
        return len(self.records) == 1


def group_by_sequence(catalog: Catalog, p: Optional[int] = None, q: Optional[int] = None) -> list[SequenceGroup]:
    """Group catalog records by degree sequence, sorted by (q, p, seq).

    Only complete cells are grouped: a partial cell could hide a second
    realisation.
    """
    buckets: dict[DegreeSequence, list[PolytopeRecord]] = {}
    for key in catalog.keys():
        if (p is not None and key[0] != p) or (q is not None and key[1] != q):
            continue
        if not catalog.is_complete(*key):
            continue
        for rec in catalog.cell(*key):
            buckets.setdefault(rec.seq, []).append(rec)
    groups = [
        SequenceGroup(seq, len(seq), sum(seq) // 2, tuple(recs)) for seq, recs in buckets.items()
    ]
    groups.sort(key=lambda g: (g.q, g.p, g.seq))
    return groups


@dataclass
class TheoremReport:
    a_value: int
    p: int
    enumerated: set = field(default_factory=set)
    predicted: set = field(default_factory=set)

    @property
    def only_enumerated(self) -> set:
        return self.enumerated - self.predicted

    @property
    def only_predicted(self) -> set:
        return self.predicted - self.enumerated

    @property
    def ok(self) -> bool:
        return self.enumerated == self.predicted

    def describe(self) -> str:
        fmt = lambda seqs: "; ".join(",".join(map(str, s)) for s in sorted(seqs)) or "-"
        lines = [
            f"a={self.a_value} p={self.p}: {'agree' if self.ok else 'DISAGREE'}",
            f"  unigraphic (enumerated): {fmt(self.enumerated)}",
            f"  families (predicted):    {fmt(self.predicted)}",
        ]
        if not self.ok:
            lines.append(f"  only enumerated: {fmt(self.only_enumerated)}")
            lines.append(f"  only predicted:  {fmt(self.only_predicted)}")
        return "\n".join(lines)


def verify_theorem(a_value: int, p: int, catalog: Catalog) -> TheoremReport:
    """Compare unigraphic sequences with ``a_value`` threes at order p to the
    closed-form family list."""
    tags = families_for(a_value)
    catalog.require_order(p)
    report = TheoremReport(a_value, p)
    for group in group_by_sequence(catalog, p=p):
        if group.unigraphic and group.seq.count(3) == a_value:
            report.enumerated.add(group.seq)
    report.predicted = {family_sequence(fc) for fc in admissible(p, tags)}
    return report
