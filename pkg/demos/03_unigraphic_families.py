"""
Unigraphic degree sequences
===========================

A degree sequence is unigraphic when exactly one radius-one 3-polytope has
it.  With two or three vertices of degree 3 the unigraphic sequences fall
into a handful of closed-form families; build each one and compare with
the enumeration.
"""

from radpoly import classify_sequence, enumerate_chord_diagrams, realize_family, verify_theorem
from radpoly.io import encode_graph6
from radpoly.sequences import admissible, family_sequence

# every family member at order 10, with its polytope in graph6
for fc in admissible(10):
    rec = realize_family(fc)
    print(f"{str(fc):16s} {','.join(map(str, family_sequence(fc))):32s} {encode_graph6(rec.graph)}")

# the classifier runs the other way
print(classify_sequence([9, 6, 6, 6, 4, 4, 4, 3, 3, 3]))

# enumerate order 10 and compare the unigraphic sequences with the families
catalog = enumerate_chord_diagrams(10)
for a in (2, 3):
    print(verify_theorem(a, 10, catalog).describe())
