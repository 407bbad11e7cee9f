"""Command-line surface: enumerate, tables, classify, realize, verify, stats.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors (including a catalog that does not cover the requested range).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io as cio
from .enumeration import (
    Catalog,
    IncompleteCatalogError,
    compare_catalogs,
    enumerate_by_edge_addition,
    enumerate_chord_diagrams,
    enumerate_chords_by_size,
    enumerate_chords_up_to,
    order_range,
    size_range,
)
from .sequences import (
    TAGS,
    FamilyClass,
    FamilyParameterError,
    classify_sequence,
    realize_family,
    realize_sequence,
    verify_theorem,
)
from .structure import check_unigraphic_structure, sweep_lemma_block_inequality
from .tables import emit_table1, emit_table23

log = logging.getLogger("radpoly")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_sequence(text: str) -> tuple[int, ...]:
    """``6,4,4,3,3`` or the shorthand ``6,4^2,3^2``."""
    out: list[int] = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        value, _, rep = part.partition("^")
        try:
            out += [int(value)] * (int(rep) if rep else 1)
        except ValueError:
            raise UsageError(f"bad degree sequence {text!r}") from None
    if not out:
        raise UsageError("empty degree sequence")
    return tuple(sorted(out, reverse=True))


def parse_range(text: str) -> range:
    """``7`` or ``5:13`` (inclusive)."""
    lo, sep, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


# -- enumerate ----------------------------------------------------------------


def _level_cells(q: int, p_max: Optional[int]) -> list[tuple[int, int]]:
    return [(p, q) for p in order_range(q) if p_max is None or p <= p_max]


def _edge_run(out: Path, q_max: int, p_max: Optional[int], jobs: int, resume: bool) -> Catalog:
    prior = None
    manifest = cio.load_manifest(out) if resume else None
    progress = manifest.get("edge_progress") if manifest else None
    if progress and progress.get("order_limit") == p_max:
        prior = cio.read_catalog(out)
        prior.complete_levels = set(range(6, min(progress["top_level"], q_max) + 1))
        log.info("resuming from level q=%d in %s", progress["top_level"], out)

    def on_level(q: int, records) -> None:
        level = Catalog()
        for rec in records:
            level.add(rec)
        done = set(range(6, q + 1))
        level.complete_levels = {
            k for k in done if p_max is None or all(p <= p_max for p in order_range(k))
        }
        level.complete_orders = {
            p for p in range(4, q // 2 + 2) if 3 * p - 6 <= q and (p_max is None or p <= p_max)
        }
        cio.write_cells(out, level, _level_cells(q, p_max))
        cio.set_edge_progress(out, p_max, q)

    return enumerate_by_edge_addition(q_max, p_max=p_max, jobs=jobs, resume=prior, on_level=on_level)


def cmd_enumerate(args: argparse.Namespace) -> int:
    out = Path(args.out) if args.out else cio.default_catalog_dir()
    q_max, p_max = args.max_edges, args.max_order
    if q_max is None and p_max is None:
        raise UsageError("enumerate needs --max-edges or --max-order")
    if p_max is not None and not 4 <= p_max <= 24:
        raise UsageError("--max-order must be in 4..24")
    if q_max is not None and q_max < 6:
        raise UsageError("--max-edges must be at least 6")
    status = EXIT_OK
    if args.method == "chords":
        if q_max is not None and p_max is not None:
            raise UsageError("--method chords takes one of --max-edges, --max-order")
        cat = enumerate_chords_by_size(q_max, jobs=args.jobs) if q_max else enumerate_chords_up_to(p_max, jobs=args.jobs)
    else:
        edge_q = q_max if q_max is not None else max(6, 3 * p_max - 6)
        cat = _edge_run(out, edge_q, p_max, args.jobs, not args.no_resume)
        if args.method == "both":
            if p_max is None:
                raise UsageError("--method both needs --max-order")
            chords = Catalog()
            for p in range(4, p_max + 1):
                chords.merge(enumerate_chord_diagrams(p, jobs=args.jobs, q_max=edge_q))
            report = compare_catalogs(chords, cat, p_max)
            print(report.describe())
            if not report.ok:
                status = EXIT_FAIL
    cio.write_catalog(out, cat)
    for q in sorted(cat.complete_levels):
        print(f"q={q} polytopes={len(cat.level(q))}")
    print(f"wrote {len(cat)} polytopes to {out}")
    return status


# -- tables / stats -------------------------------------------------------------


def _load(args: argparse.Namespace) -> Catalog:
    path = Path(args.catalog) if args.catalog else cio.default_catalog_dir()
    try:
        return cio.read_catalog(path)
    except FileNotFoundError as exc:
        raise UsageError(f"{exc}; run `radpoly enumerate` first") from None


def cmd_tables(args: argparse.Namespace) -> int:
    cat = _load(args)
    if args.which == "1":
        levels = parse_range(args.range) if args.range else range(6, max(cat.complete_levels, default=5) + 1)
        if not levels:
            raise UsageError("catalog has no complete levels")
        sys.stdout.write(emit_table1(cat, levels[-1], q_min=levels[0]))
    else:
        orders = parse_range(args.orders) if args.orders else range(4, max(cat.complete_orders, default=3) + 1)
        if not orders:
            raise UsageError("catalog has no complete orders; pass --orders")
        levels = parse_range(args.range) if args.range else range(6, 3 * orders[-1] - 5)
        sys.stdout.write(emit_table23(cat, orders[-1], levels[-1], p_min=orders[0], q_min=levels[0]))
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    cat = _load(args)
    print(f"polytopes: {len(cat)}")
    print(f"complete levels: {_spans(cat.complete_levels)}")
    print(f"complete orders: {_spans(cat.complete_orders)}")
    for p, q in cat.keys():
        flag = "" if cat.is_complete(p, q) else " (partial)"
        print(f"p={p} q={q} count={len(cat.cell(p, q))}{flag}")
    return EXIT_OK


def _spans(values) -> str:
    values = sorted(values)
    if not values:
        return "-"
    spans, start, prev = [], values[0], values[0]
    for v in values[1:] + [None]:
        if v is not None and v == prev + 1:
            prev = v
            continue
        spans.append(f"{start}" if start == prev else f"{start}..{prev}")
        if v is not None:
            start = prev = v
    return ", ".join(spans)


# -- classify / realize -----------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.seq)
    families = classify_sequence(seq)
    if not families:
        print("no family")
    for fc in families:
        print(fc)
    return EXIT_OK


def cmd_realize(args: argparse.Namespace) -> int:
    if args.sequence is not None:
        if args.family or args.p is not None or args.x is not None:
            raise UsageError("--sequence excludes --family/--p/--x")
        seq = parse_sequence(args.sequence)
        records = realize_sequence(seq)
        if not records:
            print(f"# no radius-one 3-polytope realises {','.join(map(str, seq))}")
        for rec in records:
            print(cio.encode_graph6(rec.graph))
        return EXIT_OK
    if not args.family or args.p is None:
        raise UsageError("realize needs --sequence or --family with --p")
    try:
        rec = realize_family(FamilyClass(args.family, args.p, args.x))
    except FamilyParameterError as exc:
        raise UsageError(str(exc)) from None
    print(cio.encode_graph6(rec.graph))
    return EXIT_OK


# -- verify -------------------------------------------------------------------------


def _catalog_for_orders(args: argparse.Namespace, orders: Sequence[int]) -> Catalog:
    """Catalog complete for ``orders``: loaded from --catalog when given,
    with any missing orders enumerated in memory."""
    cat = Catalog()
    if args.catalog:
        cat = _load(args)
    for p in orders:
        if any(not cat.is_complete(p, q) for q in size_range(p)):
            cat.merge(enumerate_chord_diagrams(p, jobs=args.jobs))
    return cat


def cmd_verify(args: argparse.Namespace) -> int:
    chosen = [bool(args.lemma1), args.theorem is not None, bool(args.cross_validate), bool(args.structure)]
    if sum(chosen) != 1:
        raise UsageError("verify takes exactly one of --lemma1, --theorem, --cross-validate, --structure")
    ok = True
    if args.theorem is not None:
        if args.p is None:
            raise UsageError("--theorem needs --p")
        orders = parse_range(args.p)
        cat = _catalog_for_orders(args, orders)
        for p in orders:
            report = verify_theorem(int(args.theorem) + 1, p, cat)
            print(report.describe())
            ok &= report.ok
    elif args.lemma1:
        orders = parse_range(args.p) if args.p else range(4, 13)
        cat = _catalog_for_orders(args, orders)
        report = sweep_lemma_block_inequality(r for p in orders for r in cat.records(p=p))
        print(f"lemma1 p={orders[0]}..{orders[-1]}: {report.checked} apex choices checked, "
              f"{report.skipped_pyramids} pyramids skipped, {len(report.violations)} violations")
        for code, apex, a, bound in report.violations:
            print(f"  {code.hex()} apex={apex}: a={a} < {bound}")
        ok = report.ok
    elif args.structure:
        orders = parse_range(args.p) if args.p else range(5, 14)
        cat = _catalog_for_orders(args, orders)
        for p in orders:
            report = check_unigraphic_structure(cat, p)
            print(f"structure p={p}: {report.checked} decompositions checked, {len(report.violations)} violations")
            for seq, apex, reason in report.violations:
                print(f"  {','.join(map(str, seq))} apex={apex}: {reason}")
            ok &= report.ok
    else:
        if args.p is None:
            raise UsageError("--cross-validate needs --p")
        p_max = parse_range(args.p)[-1]
        chords = enumerate_chords_up_to(p_max, jobs=args.jobs)
        edges = enumerate_by_edge_addition(max(6, 3 * p_max - 6), p_max=p_max, jobs=args.jobs)
        report = compare_catalogs(chords, edges, p_max)
        print(report.describe())
        ok = report.ok
    return EXIT_OK if ok else EXIT_FAIL


# -- entry point ----------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="radpoly", description="Radius-one 3-polytopes and their degree sequences.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="generate a catalog and write shards")
    p.add_argument("--max-edges", type=int)
    p.add_argument("--max-order", type=int)
    p.add_argument("--method", choices=["edges", "chords", "both"], default="edges")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help=f"catalog directory (default ${cio.ENV_CATALOG_DIR} or ./catalog)")
    p.add_argument("--no-resume", action="store_true", help="ignore levels already on disk")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tables", help="print count tables as CSV")
    p.add_argument("--which", choices=["1", "23"], required=True)
    p.add_argument("--range", help="edge range Q or Q1:Q2")
    p.add_argument("--orders", help="order range P or P1:P2 (cell grid)")
    p.add_argument("--catalog")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("classify", help="list the families matching a degree sequence")
    p.add_argument("seq")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("realize", help="print realisations as graph6")
    p.add_argument("--family", choices=TAGS)
    p.add_argument("--p", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--sequence")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("verify", help="check theorems and lemmas against enumeration")
    p.add_argument("--lemma1", action="store_true")
    p.add_argument("--theorem", choices=["1", "2"])
    p.add_argument("--cross-validate", action="store_true")
    p.add_argument("--structure", action="store_true")
    p.add_argument("--p", help="order P or range P1:P2")
    p.add_argument("--catalog")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="summarise a catalog on disk")
    p.add_argument("--catalog")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            log.addHandler(handler)
            log.setLevel(logging.INFO)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except (UsageError, IncompleteCatalogError, cio.ShardVersionError, cio.CorruptShardError) as exc:
        print(f"radpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        log.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
