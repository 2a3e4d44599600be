# Secants of a polygon and the triples they must avoid
#
# A secant joins two vertices of the n-gon; loops {i,i} and polygon edges count
# too.  Everything is 0-indexed.

from cyclicggm import NGon, Secant
from cyclicggm.msafts import enumerate_forbidden_triples
from cyclicggm.secants import all_secants, crosses, is_forbidden_triple, parallel_family, right_neighbors

g = NGon(7)
print(len(all_secants(g)), "secants on the 7-gon")

# Two secants cross when their endpoints interleave around the polygon.

print(crosses(g, Secant(1, 5), Secant(2, 6)))   # True
print(crosses(g, Secant(0, 1), Secant(2, 3)))   # False

# Three pairwise disjoint, non-crossing secants are forbidden when one of them
# sits between the other two.  Three parallel chords stacked on top of each
# other are the typical case; three polygon edges never are.

print(is_forbidden_triple(g, Secant(1, 6), Secant(2, 5), Secant(3, 4)))  # True
print(is_forbidden_triple(g, Secant(0, 1), Secant(2, 3), Secant(4, 5)))  # False

for n in range(3, 9):
    print(n, len(enumerate_forbidden_triples(NGon(n))))

# Secants with the same u+v mod n are parallel.  Stepping one endpoint forward
# moves a secant into the next family.

for k in range(3):
    print(k, parallel_family(g, k))
print(right_neighbors(g, Secant(1, 3)))
