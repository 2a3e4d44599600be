# Paths in the strip graph
#
# Column k of the strip graph holds parallel family k; a path moves one
# family to the right per step.  Placing {a,b} at height a-b turns these into
# +-1 lattice paths confined between y=0 and y=-n.

from cyclicggm import NGon, build_strip_graph, count_paths
from cyclicggm.lattice import (
    TOP,
    e_closed,
    enumerate_disjoint_path_pairs,
    lgv_terms,
    path_matrix,
    reflect_path,
    touches,
    unbounded_paths,
)

g = NGon(5)
sg = build_strip_graph(g)
print([len(c) for c in sg.columns])

# Path counts between start label i and end label j, by dynamic programming
# and by the reflection formula C(n,i+j) - C(n,j-i-1) - C(n,i-j-1).

pm = path_matrix(g)
for row in pm.entries:
    print(row)
print(count_paths(sg, 1, 2), e_closed(g, 1, 2))

# Unconfined paths that touch y=1 are in bijection with paths starting one
# label further out: reflect the part before the first touch.

paths = unbounded_paths(5, 0, 2)
top = [p for p in paths if touches(p, 5, TOP)]
print(len(paths), len(top))
print(top[0], "->", reflect_path(top[0], 5, TOP))

# Non-intersecting pairs from labels {i,j} must cross over (i goes to j and
# j to i), so each 2x2 minor counts them with a minus sign.

for a, value in lgv_terms(g).items():
    print(a, value, len(enumerate_disjoint_path_pairs(sg, a)))
print(sum(lgv_terms(g).values()))
