# Binomial sums behind the closed form
#
# The count of maximal triple-free sets is (n+2)/4 * C(2n,n) - 3 * 2^(2n-3).
# It comes out of a handful of exact binomial identities, checked here in
# big-integer arithmetic.

from cyclicggm import IdentityId, msaft_count_closed, verify_identity
from cyclicggm.binomials import verify_all_identities

for ident in IdentityId:
    c = verify_identity(ident, 10)
    print(f"{ident.value:12} {c.equal}  {c.lhs}")

print(len(verify_all_identities(300)), "failures for n <= 300")

# The closed form is always a whole number, even though (n+2)/4 is not.

for n in (3, 4, 5, 6, 50):
    print(n, msaft_count_closed(n))
