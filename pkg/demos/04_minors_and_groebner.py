# Cubic minors and their leading terms
#
# For each cyclic interval [a,b] and its complement [b,a], take every 3x3
# minor of the symmetric matrix of secant variables with rows in one and
# columns in the other.  Variables nearer the diagonal are larger.

from cyclicggm import NGon, generate_st_minors, initial_components, s_pair_check
from cyclicggm.ideal import leading_supports
from cyclicggm.msafts import enumerate_forbidden_triples, enumerate_msafts_bruteforce
from cyclicggm.secants import SecantSet

g = NGon(5)
gens = generate_st_minors(g)
print(len(gens), "generators")
for m in gens.minors[:3]:
    print(m.rows, m.cols, m.poly.format(one_indexed=True))

# The leading monomial of each minor is the product of a forbidden triple,
# and every forbidden triple arises this way.

for n in range(3, 10):
    gn = NGon(n)
    triples = {SecantSet.of(gn, t) for t in enumerate_forbidden_triples(gn)}
    print(n, leading_supports(gn) == triples)

# Every S-polynomial reduces to zero, so the minors are already a Groebner
# basis.  Pairs with coprime leading monomials can be skipped.

for n in (4, 5, 6):
    print(s_pair_check(NGon(n)).summary())

# Components of the initial ideal are the maximal variable sets missing
# every leading support; they coincide with the maximal triple-free sets.

for n in range(3, 7):
    gn = NGon(n)
    print(n, initial_components(gn) == enumerate_msafts_bruteforce(gn))
