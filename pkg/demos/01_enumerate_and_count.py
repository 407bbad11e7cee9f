"""
Counting radius-one 3-polytopes
===============================

Grow every radius-one 3-polytope up to 22 edges by edge addition, then
rebuild the small orders from chord diagrams and check both agree.
"""

from radpoly import enumerate_by_edge_addition, enumerate_chords_up_to, group_by_sequence
from radpoly.enumeration import compare_catalogs
from radpoly.tables import emit_table1, emit_table23

# edge addition: level q comes from level q-1 plus the wheel at even q
edges = enumerate_by_edge_addition(22)
print(emit_table1(edges, 22))

# the same polytopes grouped by degree sequence at q = 18
for group in group_by_sequence(edges, q=18):
    tag = "unigraphic" if group.unigraphic else f"{len(group.records)} realisations"
    print(",".join(map(str, group.seq)), tag)

# chord diagrams: every noncrossing chord set of the (p-1)-cycle plus an apex
chords = enumerate_chords_up_to(9)
print(emit_table23(chords, 9))

# both routes give the same canonical codes in every cell they share
edges9 = enumerate_by_edge_addition(21, p_max=9)
print(compare_catalogs(chords, edges9, 9).describe())
