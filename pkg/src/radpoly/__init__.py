"""Radius-one 3-polytopes: exhaustive enumeration and unigraphic degree sequences."""

from .canon import canonical_code, canonical_form
from .enumeration import (
    Catalog,
    ChordDiagram,
    PolytopeRecord,
    cross_validate,
    enumerate_by_edge_addition,
    enumerate_chord_diagrams,
    enumerate_chords_up_to,
    wheel,
)
from .graph import Graph, degree_sequence, is_outerplanar_2connected, is_radius_one_polytope, radius
from .io import decode_graph6, encode_graph6, read_catalog, read_shard, write_catalog, write_shard
from .sequences import FamilyClass, classify_sequence, group_by_sequence, realize_family, realize_sequence, verify_theorem
from .structure import check_lemma_block_inequality, check_unigraphic_structure, decompose
from .tables import emit_table1, emit_table23

__all__ = [
    "Catalog",
    "ChordDiagram",
    "FamilyClass",
    "Graph",
    "PolytopeRecord",
    "canonical_code",
    "canonical_form",
    "check_lemma_block_inequality",
    "check_unigraphic_structure",
    "classify_sequence",
    "cross_validate",
    "decode_graph6",
    "decompose",
    "degree_sequence",
    "emit_table1",
    "emit_table23",
    "encode_graph6",
    "enumerate_by_edge_addition",
    "enumerate_chord_diagrams",
    "enumerate_chords_up_to",
    "group_by_sequence",
    "is_outerplanar_2connected",
    "is_radius_one_polytope",
    "radius",
    "read_catalog",
    "read_shard",
    "realize_family",
    "realize_sequence",
    "verify_theorem",
    "wheel",
    "write_catalog",
    "write_shard",
]
