# Counting maximal sets that avoid forbidden triples
#
# Four independent routes to the same number: a brute-force search over the
# triple hypergraph, disjoint path pairs in the strip graph, a sum of 2x2
# path-count determinants, and a closed form in binomials.

from cyclicggm import NGon, count_msafts_lgv, dihedral_classes, msaft_count_closed
from cyclicggm.msafts import enumerate_msafts_bruteforce, enumerate_msafts_via_walks, family_counts, secant_walk

for n in range(3, 8):
    g = NGon(n)
    print(n,
          len(enumerate_msafts_bruteforce(g)),
          len(enumerate_msafts_via_walks(g)),
          count_msafts_lgv(g),
          msaft_count_closed(n))

# Past n=8 only the path-based counts are practical.

print([count_msafts_lgv(NGon(n)) for n in range(9, 16)])

# Every maximal set has 2n secants, two in each parallel family, and each
# member has exactly one way to be sent to a neighbouring member on its right.

g = NGon(5)
pool = enumerate_msafts_bruteforce(g)
m = pool[0]
print(m, len(m), family_counts(g, m))
walk = secant_walk(g, m)
start = next(iter(m))
print(" -> ".join(map(repr, walk.orbit(start))))

# Up to rotations and reflections of the pentagon there are only a dozen.

for rep, size in dihedral_classes(g, pool):
    print(size, rep)
