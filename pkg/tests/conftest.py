from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from radpoly.enumeration import enumerate_by_edge_addition, enumerate_chords_up_to  # noqa: E402
from radpoly.graph import Graph  # noqa: E402


@pytest.fixture(scope="session")
def chord_catalog():
    """Every radius-one 3-polytope of order 4..13."""
    return enumerate_chords_up_to(13)


@pytest.fixture(scope="session")
def edge_catalog():
    """Every radius-one 3-polytope with at most 26 edges."""
    return enumerate_by_edge_addition(26)


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def toggled(g: Graph, rng: random.Random) -> Graph:
    u, v = rng.sample(range(g.n), 2)
    return g.remove_edge(u, v) if g.has_edge(u, v) else g.add_edge(u, v)


_CRITERIA = {
    "1": "level counts for q <= 26",
    "2": "per-(p, q) cells for p <= 12",
    "3": "chord vs edge-addition catalogs for p <= 12",
    "4": "two-threes classification for p = 5..13",
    "5": "three-threes classification for p = 6..13",
    "6": "degree-three block bound for p <= 12",
    "7": "caterpillar / triangle structure for p <= 13",
    "8": "canonical-code and polytope-test oracles",
    "9": "byte-identical shards for --jobs 1 and 8",
}


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            number = nodeid.split("test_criterion_")[1].split("_")[0]
            if key != "passed" or rep.when == "call":
                outcomes[number] = "PASS" if key == "passed" and outcomes.get(number) != "FAIL" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes, key=int):
        terminalreporter.write_line(f"criterion {number}: {outcomes[number]}  ({_CRITERIA[number]})")
