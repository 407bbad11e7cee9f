"""Count tables over a catalog.

The level table (``--which 1``) has one row per edge count q: polytopes,
distinct degree sequences and unigraphic sequences.  The cell grid
(``--which 23``) is indexed by (q, p), each cell reading ``count`` or
``count(unigraphic)``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Optional

from .enumeration import Catalog, IncompleteCatalogError, order_range, size_range
from .sequences import group_by_sequence


@dataclass(frozen=True)
class LevelRow:
    q: int
    polytopes: int
    sequences: int
    unigraphic: int


@dataclass(frozen=True)
class CellCount:
    p: int
    q: int
    polytopes: int
    unigraphic: int

    def render(self) -> str:
        return f"{self.polytopes}({self.unigraphic})" if self.unigraphic else str(self.polytopes)


def level_row(catalog: Catalog, q: int) -> LevelRow:
    catalog.require_level(q)
    groups = group_by_sequence(catalog, q=q)
    return LevelRow(
        q,
        sum(len(g.records) for g in groups),
        len(groups),
        sum(1 for g in groups if g.unigraphic),
    )


def cell_count(catalog: Catalog, p: int, q: int) -> CellCount:
    if q not in size_range(p):
        return CellCount(p, q, 0, 0)
    if not catalog.is_complete(p, q):
        raise IncompleteCatalogError(f"catalog is missing level q={q} for order p={p}")
    groups = group_by_sequence(catalog, p=p, q=q)
    return CellCount(p, q, sum(len(g.records) for g in groups), sum(1 for g in groups if g.unigraphic))


def emit_table1(catalog: Catalog, q_max: int, q_min: int = 6) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["q", "polytopes", "sequences", "unigraphic"])
    for q in range(q_min, q_max + 1):
        r = level_row(catalog, q)
        w.writerow([r.q, r.polytopes, r.sequences, r.unigraphic])
    return out.getvalue()


def emit_table23(
    catalog: Catalog,
    p_max: int,
    q_max: Optional[int] = None,
    p_min: int = 4,
    q_min: int = 6,
) -> str:
    """Grid with a row per q and a column per p; out-of-range cells are blank."""
    if q_max is None:
        q_max = 3 * p_max - 6
    orders = range(p_min, p_max + 1)
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["q\\p", *orders])
    for q in range(q_min, q_max + 1):
        row = [q]
        for p in orders:
            row.append(cell_count(catalog, p, q).render() if p in order_range(q) else "")
        w.writerow(row)
    return out.getvalue()


def parse_table23(text: str) -> dict[tuple[int, int], tuple[int, int]]:
    """Inverse of :func:`emit_table23`: (p, q) -> (polytopes, unigraphic)."""
    rows = list(csv.reader(io.StringIO(text)))
    orders = [int(x) for x in rows[0][1:]]
    cells = {}
    for row in rows[1:]:
        q = int(row[0])
        for p, cell in zip(orders, row[1:]):
            if not cell:
                continue
            count, _, rest = cell.partition("(")
            cells[(p, q)] = (int(count), int(rest.rstrip(")")) if rest else 0)
    return cells
