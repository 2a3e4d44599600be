"""Secant walks as lattice paths on a cut-open Moebius strip.

Column ``k`` of the strip graph holds the parallel family ``k mod n``; an
edge goes from a secant to each of its right neighbours in the next column.
Column 0 (family 0, the one holding the loop at vertex 0) is cut open: it
keeps only out-edges, and its copy as column ``n`` keeps only in-edges.
Both copies label the secant ``{i, -i}`` by ``i = 0..n//2``.

In lattice coordinates a secant with unwrapped ends ``a <= b`` sits at
``(a + b, a - b)``.  Label ``i`` of column 0 is the point ``(0, -2i)`` and
label ``j`` of column ``n`` is ``(n, 2j - n)``; the strip graph is the part
of the diagonal lattice with ``-n <= y <= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, NamedTuple

from cyclicggm.binomials import binom
from cyclicggm.secants import NGon, Secant, SecantSet, parallel_family, right_neighbors

TOP = "top"
BOTTOM = "bottom"


def label_secant(g: NGon, i: int) -> Secant:
    if not 0 <= i <= g.n // 2:
        raise ValueError(f"label must lie in 0..{g.n // 2}, got {i}")
    return g.secant(i, -i)


def secant_at(g: NGon, x: int, y: int) -> Secant:
    """Secant at lattice point ``(x, y)``; ``x + y`` must be even."""
    if (x + y) % 2:
        raise ValueError(f"({x}, {y}) is not a lattice point")
    return g.secant((x + y) // 2, (x - y) // 2)


def lattice_y(g: NGon, column: int, s: Secant) -> int:
    """Height of ``s`` in ``column`` of the strip ``-n <= y <= 0``."""
    for y in range(-g.n, 1):
        if (column + y) % 2 == 0 and secant_at(g, column, y) == s:
            return y
    raise ValueError(f"{s!r} does not lie in column {column}")


@dataclass(frozen=True)
class StripGraph:
    g: NGon
    columns: tuple
    edges: dict = field(compare=False, hash=False, repr=False)

    @property
    def n(self) -> int:
        return self.g.n

    def num_vertices(self) -> int:
        return sum(len(c) for c in self.columns)

    def successors(self, column: int, s: Secant) -> tuple:
        return self.edges[column, s]


@lru_cache(maxsize=None)
def build_strip_graph(g: NGon) -> StripGraph:
    n = g.n
    first = tuple(label_secant(g, i) for i in range(n // 2 + 1))
    columns = [first]
    for k in range(1, n):
        columns.append(parallel_family(g, k))
    columns.append(first)
    edges = {}
    for k in range(n):
        nxt = set(columns[k + 1])
        for s in columns[k]:
            targets = right_neighbors(g, s)
            if not targets <= nxt:
                raise AssertionError(f"right neighbour of {s!r} left family {k + 1}")
            edges[k, s] = tuple(sorted(targets))
    return StripGraph(g, tuple(columns), edges)


def count_paths(sg: StripGraph, i: int, j: int) -> int:
    """Paths from label ``i`` in column 0 to label ``j`` in column n, by DP."""
    n = sg.n
    counts = {label_secant(sg.g, i): 1}
    for k in range(n):
        nxt: dict = {}
        for s, c in counts.items():
            for t in sg.successors(k, s):
                nxt[t] = nxt.get(t, 0) + c
        counts = nxt
    return counts.get(label_secant(sg.g, j), 0)


def iter_paths(sg: StripGraph, i: int, j: int) -> Iterator[tuple]:
    """Every path from label ``i`` to label ``j`` as a tuple of ``n + 1`` secants."""
    n = sg.n
    target = label_secant(sg.g, j)
    # backward reachability prunes dead ends
    alive = [set() for _ in range(n + 1)]
    alive[n] = {target}
    for k in range(n - 1, -1, -1):
        alive[k] = {s for s in sg.columns[k] if alive[k + 1].intersection(sg.successors(k, s))}
    start = label_secant(sg.g, i)
    if start not in alive[0]:
        return
    path = [start]

    def walk(k):
        if k == n:
            yield tuple(path)
            return
        for t in sg.successors(k, path[-1]):
            if t in alive[k + 1]:
                path.append(t)
                yield from walk(k + 1)
                path.pop()

    yield from walk(0)


def e_closed(g: NGon, i: int, j: int) -> int:
    n, m = g.n, g.n // 2
    if not (0 <= i <= m and 0 <= j <= m):
        raise ValueError(f"labels must lie in 0..{m}")
    return binom(n, i + j) - binom(n, j - i - 1) - binom(n, i - j - 1)


def e_unbounded_closed(g: NGon, i: int, j: int) -> int:
    return binom(g.n, i + j)


@dataclass(frozen=True)
class PathMatrix:
    n: int
    entries: tuple

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def size(self) -> int:
        return len(self.entries)

    def minor(self, i: int, j: int) -> int:
        """Determinant of the 2x2 block on rows and columns ``{i, j}``."""
        e = self.entries
        return e[i][i] * e[j][j] - e[i][j] * e[j][i]


def path_matrix(g: NGon, method: str = "closed") -> PathMatrix:
    m = g.n // 2
    if method == "closed":
        entry = lambda i, j: e_closed(g, i, j)
    elif method == "dp":
        sg = build_strip_graph(g)
        entry = lambda i, j: count_paths(sg, i, j)
    else:
        raise ValueError(f"unknown method {method!r}")
    return PathMatrix(g.n, tuple(tuple(entry(i, j) for j in range(m + 1)) for i in range(m + 1)))


def lgv_terms(g: NGon) -> dict:
    """``-det`` of every 2x2 principal block, keyed by the label pair."""
    pm = path_matrix(g)
    return {(i, j): -pm.minor(i, j) for i, j in combinations(range(pm.size), 2)}


def count_msafts_lgv(g: NGon) -> int:
    """Number of Msafts as a sum of 2x2 path-matrix determinants.

    ``n = 3`` is accepted and gives 1, although the count is only claimed
    for ``n >= 4``.
    """
    return sum(lgv_terms(g).values())


def count_msafts_lgv_double_sum(g: NGon) -> int:
    """Same count as the symmetric double sum over all label pairs, halved."""
    n, m = g.n, g.n // 2
    total = 0
    for i in range(m + 1):
        for j in range(m + 1):
            e = binom(n, i + j) - binom(n, i - j - 1) - binom(n, j - i - 1)
            total += e * e - binom(n, 2 * i) * binom(n, 2 * j)
    q, r = divmod(total, 2)
    if r:
        raise ArithmeticError("double sum is odd")
    return q


class PathPair(NamedTuple):
    labels: tuple
    first: tuple
    second: tuple
    swapped: bool

    def secant_set(self, g: NGon) -> SecantSet:
        return SecantSet.of(g, set(self.first) | set(self.second))


def enumerate_disjoint_path_pairs(sg: StripGraph, a: tuple) -> list:
    """Vertex-disjoint path pairs from ``a = (i, j)`` in column 0 to ``a`` in column n.

    Both target assignments are tried; ``swapped`` marks the pairs that run
    ``i -> j`` and ``j -> i``.
    """
    i, j = sorted(a)
    if i == j:
        raise ValueError("label pair must have two distinct labels")
    out = []
    for swapped, (t1, t2) in ((False, (i, j)), (True, (j, i))):
        seconds = list(iter_paths(sg, j, t2))
        for p in iter_paths(sg, i, t1):
            for q in seconds:
                if all(x != y for x, y in zip(p, q)):
                    out.append(PathPair((i, j), p, q, swapped))
    return out


# --- unbounded strip and the reflection principle -------------------------


class LatticePath(NamedTuple):
    start: int
    steps: tuple  # each +1 or -1

    def heights(self) -> list:
        ys = [self.start]
        for s in self.steps:
            ys.append(ys[-1] + s)
        return ys

    @property
    def end(self) -> int:
        return self.start + sum(self.steps)


def unbounded_paths(n: int, i: int, j: int) -> list:
    """All ``n``-step paths through the unbounded strip from ``(0, -2i)`` to ``(n, 2j - n)``."""
    start, end = -2 * i, 2 * j - n
    return [LatticePath(start, steps) for steps in product((1, -1), repeat=n)
            if start + sum(steps) == end]


def boundary_height(n: int, boundary: str) -> int:
    if boundary == TOP:
        return 1
    if boundary == BOTTOM:
        return -n - 1
    raise ValueError(f"unknown boundary {boundary!r}")


def touches(p: LatticePath, n: int, boundary: str) -> bool:
    return boundary_height(n, boundary) in p.heights()


def in_strip(p: LatticePath, n: int) -> bool:
    return all(-n <= y <= 0 for y in p.heights())


def reflect_path(p: LatticePath, n: int, boundary: str) -> LatticePath:
    """Reflect ``p`` in the boundary line at its first touch.

    Bottom: steps after the first touch of ``y = -n-1`` are reversed.  Top:
    steps up to the first touch of ``y = 1`` are reversed, which moves the
    start point instead.
    """
    line = boundary_height(n, boundary)
    ys = p.heights()
    if line not in ys:
        raise ValueError(f"path does not touch the {boundary} line y={line}")
    t = ys.index(line)
    steps = list(p.steps)
    if boundary == BOTTOM:
        steps[t:] = [-s for s in steps[t:]]
        return LatticePath(p.start, tuple(steps))
    steps[:t] = [-s for s in steps[:t]]
    return LatticePath(2 * line - p.start, tuple(steps))


def label_of_start(y: int) -> int:
    if y % 2:
        raise ValueError(f"start height {y} is odd")
    return -y // 2


def label_of_end(n: int, y: int) -> int:
    if (y + n) % 2:
        raise ValueError(f"end height {y} has the wrong parity")
    return (y + n) // 2
