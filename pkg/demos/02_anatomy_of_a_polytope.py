"""
Apex, Hamiltonian cycle and chord graph
=======================================

Take one polytope apart: remove its universal vertex, find the outer cycle
of what is left, and look at the chords.
"""

from radpoly import ChordDiagram, decompose, degree_sequence
from radpoly.enumeration import apex_graph
from radpoly.structure import block_cycle_profile, cycle_rank, lemma_block_bound

# a 7-cycle with a triangle of chords and one more chord hanging off it
g = apex_graph(ChordDiagram.of(7, [(0, 2), (2, 4), (0, 4), (4, 6)]))
print("degree sequence:", degree_sequence(g))

d = decompose(g)
print("apex:", d.apex)
print("outer cycle of g - apex:", d.h_cycle)
print("chords:", sorted(d.chord_graph.edges()))

# chord-graph degrees are polytope degrees minus three
print("chord graph degrees:", d.s_prime)
print("cycle rank of the chord graph:", cycle_rank(d.chord_graph))

# blocks bounded by an i-cycle, and the lower bound they put on the number of degree-3 vertices
print("block profile:", block_cycle_profile(d.chord_graph, d.h_cycle))
print("degree-3 vertices:", d.a, ">= bound", lemma_block_bound(d))
