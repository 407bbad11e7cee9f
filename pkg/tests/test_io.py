from __future__ import annotations

import json
import random

import networkx as nx
import pytest

from radpoly.enumeration import enumerate_by_edge_addition, wheel
from radpoly.graph import Graph
from radpoly.io import (
    CorruptShardError,
    Graph6Error,
    ShardVersionError,
    decode_graph6,
    default_catalog_dir,
    encode_graph6,
    read_catalog,
    read_shard,
    write_catalog,
    write_shard,
)


class TestGraph6:
    def test_k4(self):
        assert encode_graph6(wheel(4)) == "C~"

    def test_single_vertex(self):
        assert encode_graph6(Graph.empty(1)) == "@"
        assert decode_graph6("@") == Graph.empty(1)

    def test_matches_networkx(self):
        rng = random.Random(9)
        for _ in range(50):
            n = rng.randint(0, 20)
            h = nx.gnp_random_graph(n, 0.4, seed=rng.randint(0, 10**6))
            g = Graph.from_edges(n, h.edges())
            expected = nx.to_graph6_bytes(h, header=False).decode().strip()
            assert encode_graph6(g) == expected
            assert decode_graph6(expected) == g

    def test_round_trip_on_catalog(self, chord_catalog):
        for rec in chord_catalog.records():
            assert decode_graph6(encode_graph6(rec.graph)) == rec.graph

    def test_header_prefix_accepted(self):
        assert decode_graph6(">>graph6<<C~\n") == wheel(4)

    def test_decode_errors_report_offset(self):
        with pytest.raises(Graph6Error, match="at byte 2"):
            decode_graph6("C~~")
        with pytest.raises(Graph6Error, match="at byte 1"):
            decode_graph6("C")
        with pytest.raises(Graph6Error, match="at byte 1"):
            decode_graph6("C ")
        with pytest.raises(Graph6Error, match="at byte 0"):
            decode_graph6("")
        with pytest.raises(Graph6Error, match="padding bits at byte 1"):
            decode_graph6("B" + chr(63 + 1))


@pytest.fixture(scope="module")
def small_catalog():
    return enumerate_by_edge_addition(16)


class TestShards:
    def test_round_trip_level(self, tmp_path, small_catalog):
        records = small_catalog.cell(7, 12) + small_catalog.cell(6, 12)
        for p in (6, 7):
            write_shard(tmp_path / f"{p}.g6", p, 12, small_catalog.cell(p, 12))
            got_p, got_q, got = read_shard(tmp_path / f"{p}.g6")
            assert (got_p, got_q) == (p, 12)
            assert got == small_catalog.cell(p, 12)
        assert len(records) == 2

    def test_sorted_by_code(self, tmp_path, small_catalog):
        cell = small_catalog.cell(8, 16)
        write_shard(tmp_path / "s.g6", 8, 16, list(reversed(cell)))
        assert [r.code for r in read_shard(tmp_path / "s.g6")[2]] == sorted(r.code for r in cell)

    def test_truncated(self, tmp_path, small_catalog):
        path = tmp_path / "s.g6"
        write_shard(path, 8, 16, small_catalog.cell(8, 16))
        data = path.read_bytes()
        path.write_bytes(data[:-5])
        with pytest.raises(CorruptShardError, match="corrupt shard"):
            read_shard(path)
        path.write_bytes(data.split(b"\n")[0])
        with pytest.raises(CorruptShardError, match="corrupt shard"):
            read_shard(path)

    def test_tampered_body(self, tmp_path, small_catalog):
        path = tmp_path / "s.g6"
        write_shard(path, 8, 16, small_catalog.cell(8, 16))
        lines = path.read_bytes().split(b"\n")
        lines[1], lines[2] = lines[2], lines[1]
        path.write_bytes(b"\n".join(lines))
        with pytest.raises(CorruptShardError, match="digest mismatch"):
            read_shard(path)

    def test_version_mismatch(self, tmp_path, small_catalog):
        path = tmp_path / "s.g6"
        write_shard(path, 8, 16, small_catalog.cell(8, 16))
        path.write_bytes(path.read_bytes().replace(b"version=1", b"version=2", 1))
        with pytest.raises(ShardVersionError):
            read_shard(path)


class TestCatalogDir:
    def test_round_trip(self, tmp_path, small_catalog):
        write_catalog(tmp_path, small_catalog)
        back = read_catalog(tmp_path)
        assert back.complete_levels == small_catalog.complete_levels
        assert back.complete_orders == small_catalog.complete_orders
        assert back.keys() == small_catalog.keys()
        for key in back.keys():
            assert back.cell(*key) == small_catalog.cell(*key)

    def test_manifest_is_deterministic(self, tmp_path, small_catalog):
        write_catalog(tmp_path / "a", small_catalog)
        write_catalog(tmp_path / "b", small_catalog)
        a = (tmp_path / "a" / "catalog.json").read_bytes()
        assert a == (tmp_path / "b" / "catalog.json").read_bytes()
        doc = json.loads(a)
        assert doc["complete_levels"] == list(range(6, 17))
        assert [s["file"] for s in doc["shards"]] == sorted(s["file"] for s in doc["shards"])

    def test_manifest_count_mismatch(self, tmp_path, small_catalog):
        write_catalog(tmp_path, small_catalog)
        path = tmp_path / "catalog.json"
        doc = json.loads(path.read_text())
        doc["shards"][0]["count"] += 1
        path.write_text(json.dumps(doc))
        with pytest.raises(CorruptShardError):
            read_catalog(tmp_path)

    def test_missing(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_catalog(tmp_path)

    def test_default_dir_from_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv("RADPOLY_CATALOG_DIR", str(tmp_path))
        assert default_catalog_dir() == tmp_path
