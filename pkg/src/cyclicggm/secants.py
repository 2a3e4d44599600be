"""Secants of the regular n-gon and the cyclic predicates built on them.

Vertices are ``0..n-1`` in cyclic order.  A secant is an unordered pair of
vertices, loops included, stored canonically with ``u <= v``.  The dense
triangular index ``idx(u, v) = v*(v+1)//2 + u`` numbers all ``C(n+1, 2)``
secants and doubles as the bit position inside a :class:`SecantSet`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class NGon:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"an n-gon needs n >= 3, got {self.n!r}")

    @property
    def num_secants(self) -> int:
        return self.n * (self.n + 1) // 2

    def secant(self, a: int, b: int) -> "Secant":
        """Canonical secant through vertices ``a`` and ``b`` taken mod n."""
        a %= self.n
        b %= self.n
        return Secant(a, b) if a <= b else Secant(b, a)


@dataclass(frozen=True, order=False)
class Secant:
    u: int
    v: int

    def __post_init__(self):
        if not 0 <= self.u <= self.v:
            raise ValueError(f"secant must satisfy 0 <= u <= v, got {self.u}, {self.v}")

    @property
    def idx(self) -> int:
        return self.v * (self.v + 1) // 2 + self.u

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def is_edge(self, g: NGon) -> bool:
        return self.v - self.u == 1 or (self.u == 0 and self.v == g.n - 1)

    def family(self, g: NGon) -> int:
        return (self.u + self.v) % g.n

    @property
    def ends(self) -> frozenset:
        return frozenset((self.u, self.v))

    def __lt__(self, other: "Secant") -> bool:
        return self.idx < other.idx

    def __iter__(self) -> Iterator[int]:
        yield self.u
        yield self.v

    def __repr__(self) -> str:
        return f"{{{self.u},{self.v}}}"


def secant_from_idx(idx: int) -> Secant:
    v = int(((8 * idx + 1) ** 0.5 - 1) // 2)
    while v * (v + 1) // 2 > idx:
        v -= 1
    while (v + 1) * (v + 2) // 2 <= idx:
        v += 1
    return Secant(idx - v * (v + 1) // 2, v)


def check_secant(g: NGon, s: Secant) -> Secant:
    if s.v >= g.n:
        raise ValueError(f"{s!r} is not a secant of the {g.n}-gon")
    return s


@lru_cache(maxsize=None)
def all_secants(g: NGon) -> tuple:
    """All ``C(n+1, 2)`` canonical secants, sorted by index."""
    return tuple(Secant(u, v) for v in range(g.n) for u in range(v + 1))


class SecantSet:
    """Immutable set of secants of one n-gon, stored as an int bitmask."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if bits < 0 or bits >> (n * (n + 1) // 2):
            raise ValueError("bitmask sets positions beyond the secant range")
        self.n = n
        self.bits = bits

    @classmethod
    def of(cls, g: NGon, secants: Iterable[Secant]) -> "SecantSet":
        bits = 0
        for s in secants:
            bits |= 1 << check_secant(g, s).idx
        return cls(g.n, bits)

    @classmethod
    def from_pairs(cls, g: NGon, pairs: Iterable[Sequence[int]]) -> "SecantSet":
        return cls.of(g, (g.secant(a, b) for a, b in pairs))

    def indices(self) -> list:
        out, bits, i = [], self.bits, 0
        while bits:
            if bits & 1:
                out.append(i)
            bits >>= 1
            i += 1
        return out

    def __iter__(self) -> Iterator[Secant]:
        return (secant_from_idx(i) for i in self.indices())

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, s: Secant) -> bool:
        return bool(self.bits >> s.idx & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, SecantSet) and (self.n, self.bits) == (other.n, other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def sort_key(self) -> tuple:
        return tuple(self.indices())

    def __lt__(self, other: "SecantSet") -> bool:
        return self.sort_key() < other.sort_key()

    def pairs(self) -> list:
        return [[s.u, s.v] for s in self]

    def __repr__(self) -> str:
        return "SecantSet(n=%d, %s)" % (self.n, " ".join(map(repr, self)))


def _between(x: int, p: int, q: int) -> bool:
    # strictly inside the open integer interval (p, q), p < q
    return p < x < q


def crosses(g: NGon, a: Secant, b: Secant) -> bool:
    """True if ``a`` and ``b`` share a vertex or cross in the interior."""
    if a.ends & b.ends:
        return True
    if a.is_loop or b.is_loop:
        return False
    return _between(b.u, a.u, a.v) != _between(b.v, a.u, a.v)


def _splits(middle: Secant, a: Secant, b: Secant) -> bool:
    p, q = middle.u, middle.v
    if p == q:
        return False
    side_a = {_between(x, p, q) for x in a}
    side_b = {_between(x, p, q) for x in b}
    return len(side_a) == 1 and len(side_b) == 1 and side_a != side_b


def is_forbidden_triple(g: NGon, a: Secant, b: Secant, c: Secant) -> bool:
    """Pairwise disjoint, non-crossing, and one of the three separates the others."""
    if len({a, b, c}) < 3:
        raise ValueError("a forbidden triple needs three distinct secants")
    if (a.ends & b.ends) or (a.ends & c.ends) or (b.ends & c.ends):
        return False
    if crosses(g, a, b) or crosses(g, a, c) or crosses(g, b, c):
        return False
    return _splits(a, b, c) or _splits(b, a, c) or _splits(c, a, b)


def is_forbidden_ktuple(g: NGon, secants: Sequence[Secant]) -> bool:
    """Cut-line test by exhaustive search.

    Looks for an ordered pair of distinct vertices ``a, b`` and an
    orientation of every secant as ``(x_i, y_i)`` such that the ``x_i`` sit on
    the closed arc walked upward from ``a`` to ``b``, the ``y_i`` on the closed
    arc walked downward from ``a`` to ``b``, and the secants can be listed so
    that both sequences appear in walking order.
    """
    secants = list(secants)
    if len(set(secants)) != len(secants):
        raise ValueError("repeated secant in k-tuple")
    if len(secants) < 2:
        raise ValueError("k-tuple needs k >= 2")
    seen: set = set()
    for s in secants:
        if s.ends & seen:
            return False
        seen |= s.ends
    n = g.n
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            up = {(a + t) % n: t for t in range((b - a) % n + 1)}
            down = {(a - t) % n: t for t in range((a - b) % n + 1)}
            for flips in product((False, True), repeat=len(secants)):
                pos = []
                for s, flip in zip(secants, flips):
                    x, y = (s.v, s.u) if flip else (s.u, s.v)
                    if x not in up or y not in down:
                        break
                    pos.append((up[x], down[y]))
                else:
                    pos.sort()
                    if all(p[1] < q[1] for p, q in zip(pos, pos[1:])):
                        return True
    return False


def right_neighbors(g: NGon, s: Secant) -> frozenset:
    i, j = s.u, s.v
    return frozenset((g.secant(i, j + 1), g.secant(i + 1, j)))


def left_neighbors(g: NGon, s: Secant) -> frozenset:
    i, j = s.u, s.v
    return frozenset((g.secant(i - 1, j), g.secant(i, j - 1)))


@lru_cache(maxsize=None)
def parallel_family(g: NGon, k: int) -> tuple:
    """Secants ``{u, v}`` with ``u + v = k (mod n)``, sorted by index."""
    if not 0 <= k < g.n:
        raise ValueError(f"family residue must lie in 0..{g.n - 1}")
    return tuple(s for s in all_secants(g) if s.family(g) == k)


@dataclass(frozen=True)
class DihedralElement:
    rotation: int = 0
    reflected: bool = False

    def apply(self, g: NGon, vertex: int) -> int:
        if self.reflected:
            vertex = -vertex
        return (vertex + self.rotation) % g.n


def dihedral_group(g: NGon) -> list:
    return [DihedralElement(r, f) for f in (False, True) for r in range(g.n)]


def dihedral_image(g: NGon, e: DihedralElement, s: Secant) -> Secant:
    return g.secant(e.apply(g, s.u), e.apply(g, s.v))


@lru_cache(maxsize=None)
def dihedral_permutation(g: NGon, e: DihedralElement) -> tuple:
    """Index permutation induced by ``e``: position ``i`` holds the image index."""
    return tuple(dihedral_image(g, e, s).idx for s in all_secants(g))


def transform_set(g: NGon, e: DihedralElement, s: SecantSet) -> SecantSet:
    perm = dihedral_permutation(g, e)
    bits = 0
    for i in s.indices():
        bits |= 1 << perm[i]
    return SecantSet(g.n, bits)

