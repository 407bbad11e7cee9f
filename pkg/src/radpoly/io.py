"""graph6 interchange and on-disk catalog shards.

A shard holds one (p, q) cell: a header line, then one graph6 line per record
in canonical-code order.  Each record is stored canonically labeled, so its
certificate is read straight off the adjacency bits.  ``catalog.json`` lists
the shards and what the catalog is complete for.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
from pathlib import Path
from typing import Optional

from .canon import raw_code
from .enumeration import Catalog, PolytopeRecord
from .graph import Graph

SHARD_VERSION = 1
MANIFEST = "catalog.json"
ENV_CATALOG_DIR = "RADPOLY_CATALOG_DIR"

_HEADER = re.compile(
    r"^>>radpoly-shard<< version=(\d+) p=(\d+) q=(\d+) count=(\d+) sha256=([0-9a-f]{64})$"
)


class Graph6Error(ValueError):
    pass


class CorruptShardError(ValueError):
    pass


class ShardVersionError(ValueError):
    pass


def default_catalog_dir() -> Path:
    return Path(os.environ.get(ENV_CATALOG_DIR, "catalog"))


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise ValueError("short graph6 form needs n <= 62")
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line at byte 0")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r} at byte {i}")
    if s[0] == "~":
        raise Graph6Error("long-form graph6 (n > 62) unsupported at byte 0")
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(s) - 1} at byte {min(len(s), need + 1)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    tail = k % 6
    if tail and (ord(s[-1]) - 63) & ((1 << (6 - tail)) - 1):
        raise Graph6Error(f"nonzero padding bits at byte {len(s) - 1}")
    return Graph(n, tuple(rows))


def shard_name(p: int, q: int) -> str:
    return f"p{p:02d}_q{q:02d}.g6"


def _body(records: list[PolytopeRecord]) -> bytes:
    return "".join(encode_graph6(r.graph) + "\n" for r in records).encode("ascii")


def write_shard(path: Path, p: int, q: int, records: list[PolytopeRecord]) -> str:
    """Write one cell; returns the body digest."""
    records = sorted(records, key=lambda r: r.code)
    body = _body(records)
    digest = hashlib.sha256(body).hexdigest()
    header = f">>radpoly-shard<< version={SHARD_VERSION} p={p} q={q} count={len(records)} sha256={digest}\n"
    tmp = Path(path).with_suffix(".tmp")
    tmp.write_bytes(header.encode("ascii") + body)
    os.replace(tmp, path)
    return digest


def read_shard(path: Path) -> tuple[int, int, list[PolytopeRecord]]:
    raw = Path(path).read_bytes()
    head, sep, body = raw.partition(b"\n")
    if not sep:
        raise CorruptShardError(f"corrupt shard {path}: missing header")
    text = head.decode("ascii", errors="replace")
    version = re.match(r"^>>radpoly-shard<< version=(\d+)", text)
    if version and int(version.group(1)) != SHARD_VERSION:
        raise ShardVersionError(f"shard {path} has version {version.group(1)}, expected {SHARD_VERSION}")
    m = _HEADER.match(text)
    if not m:
        raise CorruptShardError(f"corrupt shard {path}: bad header")
    p, q, count = int(m.group(2)), int(m.group(3)), int(m.group(4))
    if hashlib.sha256(body).hexdigest() != m.group(5):
        raise CorruptShardError(f"corrupt shard {path}: digest mismatch")
    lines = body.decode("ascii").splitlines()
    if len(lines) != count:
        raise CorruptShardError(f"corrupt shard {path}: {len(lines)} records, header says {count}")
    records = []
    for line in lines:
        g = decode_graph6(line)
        rec = PolytopeRecord._trusted(g, raw_code(g))
        if (rec.p, rec.q) != (p, q):
            raise CorruptShardError(f"corrupt shard {path}: record of order {rec.p}, size {rec.q}")
        records.append(rec)
    return p, q, records


def _manifest_path(out_dir: Path) -> Path:
    return Path(out_dir) / MANIFEST


def write_cells(out_dir: Path, catalog: Catalog, cells: list[tuple[int, int]]) -> None:
    """Write the given cells, then rewrite the manifest."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = load_manifest(out_dir) or {"shards": {}}
    shards = manifest["shards"]
    for p, q in cells:
        name = shard_name(p, q)
        digest = write_shard(out_dir / name, p, q, catalog.cell(p, q))
        shards[name] = {"p": p, "q": q, "count": len(catalog.cell(p, q)), "sha256": digest}
    manifest["shards"] = shards
    manifest["complete_levels"] = sorted(catalog.complete_levels)
    manifest["complete_orders"] = sorted(catalog.complete_orders)
    _write_manifest(out_dir, manifest)


def _write_manifest(out_dir: Path, manifest: dict) -> None:
    doc = {
        "format": "radpoly-catalog",
        "version": SHARD_VERSION,
        "complete_levels": manifest.get("complete_levels", []),
        "complete_orders": manifest.get("complete_orders", []),
        "edge_progress": manifest.get("edge_progress"),
        "shards": [manifest["shards"][k] | {"file": k} for k in sorted(manifest["shards"])],
    }
    path = _manifest_path(out_dir)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    os.replace(tmp, path)


def load_manifest(out_dir: Path) -> Optional[dict]:
    path = _manifest_path(out_dir)
    if not path.exists():
        return None
    doc = json.loads(path.read_text())
    if doc.get("version") != SHARD_VERSION:
        raise ShardVersionError(f"catalog manifest version {doc.get('version')}, expected {SHARD_VERSION}")
    doc["shards"] = {s["file"]: {k: v for k, v in s.items() if k != "file"} for s in doc["shards"]}
    return doc


def set_edge_progress(out_dir: Path, order_limit: Optional[int], top_level: int) -> None:
    manifest = load_manifest(out_dir) or {"shards": {}}
    manifest["edge_progress"] = {"order_limit": order_limit, "top_level": top_level}
    _write_manifest(out_dir, manifest)


def write_catalog(out_dir: Path, catalog: Catalog) -> None:
    """Write every complete in-range cell (empty ones included)."""
    from .enumeration import size_range

    cells = set(catalog.keys())
    for p in catalog.complete_orders:
        cells |= {(p, q) for q in size_range(p)}
    for q in catalog.complete_levels:
        from .enumeration import order_range

        cells |= {(p, q) for p in order_range(q)}
    write_cells(out_dir, catalog, sorted(c for c in cells if catalog.is_complete(*c)))


def read_catalog(out_dir: Path) -> Catalog:
    manifest = load_manifest(out_dir)
    if manifest is None:
        raise FileNotFoundError(f"no catalog manifest in {out_dir}")
    cat = Catalog()
    for name, meta in sorted(manifest["shards"].items()):
        p, q, records = read_shard(Path(out_dir) / name)
        if len(records) != meta["count"]:
            raise CorruptShardError(f"corrupt shard {name}: count disagrees with manifest")
        cat.cells.setdefault((p, q), {})
        for rec in records:
            cat.add(rec)
    cat.complete_levels = set(manifest.get("complete_levels", []))
    cat.complete_orders = set(manifest.get("complete_orders", []))
    return cat
