"""Forbidden triples, Msafts and secant walks.

An Msaft (maximal set avoiding forbidden triples) is an inclusion-maximal
independent set of the 3-uniform hypergraph whose hyperedges are the
forbidden triples.  Two enumerators live here: a brute-force search over
that hypergraph, and one that reads Msafts off disjoint path pairs in the
strip graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from cyclicggm.lattice import build_strip_graph, enumerate_disjoint_path_pairs
from cyclicggm.secants import (
    NGon,
    Secant,
    SecantSet,
    all_secants,
    dihedral_group,
    is_forbidden_triple,
    parallel_family,
    right_neighbors,
    transform_set,
)

BRUTEFORCE_MAX_N = 8


class WalkError(ValueError):
    pass


class NoWalkError(WalkError):
    pass


class AmbiguousWalkError(WalkError):
    pass


class EnumerationBoundError(RuntimeError):
    """Raised when a request exceeds a configured size bound."""


@lru_cache(maxsize=None)
def enumerate_forbidden_triples(g: NGon) -> tuple:
    """All forbidden triples as index-sorted secant triples, in lexicographic order."""
    return tuple(t for t in combinations(all_secants(g), 3) if is_forbidden_triple(g, *t))


def triple_masks(g: NGon) -> tuple:
    return tuple((1 << a.idx) | (1 << b.idx) | (1 << c.idx)
                 for a, b, c in enumerate_forbidden_triples(g))


def _partner_pairs(num_vertices: int, edges: Iterable[int]) -> list:
    # for each vertex, the masks of the other two members of every hyperedge on it
    pairs = [[] for _ in range(num_vertices)]
    for e in edges:
        for v in range(num_vertices):
            if e >> v & 1:
                pairs[v].append(e & ~(1 << v))
    return pairs


def _closing_order(num_vertices: int, edges: list) -> list:
    # greedy: next vertex closes the most hyperedges among those already placed
    placed, order = 0, []
    degree = [sum(e >> v & 1 for e in edges) for v in range(num_vertices)]
    while len(order) < num_vertices:
        best = None
        for v in range(num_vertices):
            if placed >> v & 1:
                continue
            closed = touched = 0
            for e in edges:
                if e >> v & 1:
                    rest = e & ~(1 << v)
                    closed += rest & placed == rest
                    touched += bool(rest & placed)
            key = (closed, touched, degree[v], -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed |= 1 << best[1]
    return order


def _relabel(mask: int, perm: list) -> int:
    out = 0
    for v, w in enumerate(perm):
        if mask >> v & 1:
            out |= 1 << w
    return out


def maximal_independent_sets(num_vertices: int, edges: Iterable[int]) -> list:
    """Inclusion-maximal vertex sets containing no hyperedge, as bitmasks.

    Vertices are decided one at a time in a greedy order that closes
    hyperedges early.  Including ``v`` is allowed when no hyperedge through
    ``v`` has its other members already included.  Excluding ``v`` must stay
    justifiable: some hyperedge through ``v`` must keep both partners
    undecided or included, and excluding ``v`` must not strand an earlier
    excluded vertex.
    """
    edges = list(edges)
    order = _closing_order(num_vertices, edges)
    position = [0] * num_vertices
    for pos, v in enumerate(order):
        position[v] = pos
    found = _search_independent(num_vertices, [_relabel(e, position) for e in edges])
    return [_relabel(m, order) for m in found]


def _search_independent(num_vertices: int, edges: list) -> list:
    pairs = _partner_pairs(num_vertices, edges)
    dependents = [[] for _ in range(num_vertices)]
    for v in range(num_vertices):
        for pm in pairs[v]:
            for w in range(num_vertices):
                if pm >> w & 1 and v not in dependents[w]:
                    dependents[w].append(v)
    results = []

    def alive(v, excluded):
        return any(not pm & excluded for pm in pairs[v])

    def search(v, included, excluded):
        if v == num_vertices:
            results.append(included)
            return
        bit = 1 << v
        if all(pm & included != pm for pm in pairs[v]):
            search(v + 1, included | bit, excluded)
        ex = excluded | bit
        if alive(v, ex) and all(alive(w, ex) for w in dependents[v] if ex >> w & 1):
            search(v + 1, included, ex)

    search(0, 0, 0)
    return results


def is_msaft(g: NGon, s: SecantSet) -> bool:
    bits = s.bits
    masks = triple_masks(g)
    if any(m & bits == m for m in masks):
        return False
    for t in all_secants(g):
        b = 1 << t.idx
        if bits & b:
            continue
        if not any(m & b and (m & ~b) & bits == m & ~b for m in masks):
            return False
    return True


def maximality_witness(g: NGon, s: SecantSet, outsider: Secant):
    """A forbidden triple made of ``outsider`` and two members of ``s``, or None."""
    for t in enumerate_forbidden_triples(g):
        if outsider in t and all(x in s for x in t if x != outsider):
            return t
    return None


def _canonical(g: NGon, bitsets: Iterable[int]) -> list:
    return sorted({SecantSet(g.n, b) for b in bitsets}, key=SecantSet.sort_key)


def enumerate_msafts_bruteforce(g: NGon, max_n: int = BRUTEFORCE_MAX_N) -> list:
    """All Msafts via maximal independent sets of the forbidden-triple hypergraph."""
    if g.n > max_n:
        raise EnumerationBoundError(f"brute force is capped at n={max_n}, got n={g.n}")
    return _canonical(g, maximal_independent_sets(g.num_secants, triple_masks(g)))


def enumerate_msafts_via_walks(g: NGon) -> list:
    """Underlying sets of disjoint path pairs in the strip graph, over every label pair."""
    sg = build_strip_graph(g)
    bits = []
    for a in combinations(range(g.n // 2 + 1), 2):
        bits.extend(p.secant_set(g).bits for p in enumerate_disjoint_path_pairs(sg, a))
    out = _canonical(g, bits)
    if len(out) != len(bits):
        raise AssertionError("two path pairs produced the same secant set")
    return out


def family_counts(g: NGon, s: SecantSet) -> list:
    return [sum(1 for t in parallel_family(g, k) if t in s) for k in range(g.n)]


@dataclass(frozen=True)
class SecantWalk:
    g: NGon
    assignment: dict

    def __call__(self, s: Secant) -> Secant:
        return self.assignment[s]

    def orbit(self, start: Secant) -> list:
        out = [start]
        s = self.assignment[start]
        while s != start:
            out.append(s)
            s = self.assignment[s]
        return out

    def is_single_cycle(self) -> bool:
        start = next(iter(self.assignment))
        return len(self.orbit(start)) == len(self.assignment)


def all_secant_walks(g: NGon, s: SecantSet, limit: int | None = None) -> list:
    """Injective right-neighbour assignments on ``s``; stops after ``limit`` found."""
    members = sorted(s)
    options = [sorted(t for t in right_neighbors(g, a) if t in s) for a in members]
    found = []
    used: set = set()
    chosen = []

    def search(k):
        if limit is not None and len(found) >= limit:
            return
        if k == len(members):
            found.append(dict(zip(members, chosen)))
            return
        for t in options[k]:
            if t not in used:
                used.add(t)
                chosen.append(t)
                search(k + 1)
                chosen.pop()
                used.discard(t)

    search(0)
    return found


def secant_walk(g: NGon, m: SecantSet) -> SecantWalk:
    """The unique secant walk on ``m``; raises if there is none or more than one."""
    walks = all_secant_walks(g, m, limit=2)
    if not walks:
        raise NoWalkError(f"no secant walk on {m!r}")
    if len(walks) > 1:
        raise AmbiguousWalkError(f"more than one secant walk on {m!r}")
    return SecantWalk(g, walks[0])


def moving_lemma_violations(g: NGon, m: SecantSet) -> list:
    """Every failed instance of the right/left neighbour conditions on ``m``.

    For each member ``{i, j}`` some right neighbour and some left neighbour
    must be a member.  When ``{i-1, j+1}`` is a different member as well, one
    of ``{i-1, j+2}``, ``{i+1, j}`` and one of ``{i-2, j+1}``, ``{i, j-1}``
    must be members; this clause is checked for both orders of ``i, j``.
    """
    sec = g.secant
    bad = []
    for a in m:
        for i, j in ((a.u, a.v), (a.v, a.u)):
            if sec(i, j + 1) not in m and sec(i + 1, j) not in m:
                bad.append((a, "right"))
            if sec(i - 1, j) not in m and sec(i, j - 1) not in m:
                bad.append((a, "left"))
            outer = sec(i - 1, j + 1)
            if outer != a and outer in m:
                if sec(i - 1, j + 2) not in m and sec(i + 1, j) not in m:
                    bad.append((a, "right-pair", (i, j)))
                if sec(i - 2, j + 1) not in m and sec(i, j - 1) not in m:
                    bad.append((a, "left-pair", (i, j)))
    return bad


def check_moving_lemma(g: NGon, m: SecantSet) -> bool:
    if not is_msaft(g, m):
        raise ValueError(f"{m!r} is not an Msaft")
    return not moving_lemma_violations(g, m)


def dihedral_orbit(g: NGon, s: SecantSet) -> set:
    return {transform_set(g, e, s) for e in dihedral_group(g)}


def dihedral_classes(g: NGon, msafts: Iterable[SecantSet]) -> list:
    """``(representative, orbit size)`` per orbit; representative is the orbit minimum."""
    pool = set(msafts)
    seen: set = set()
    classes = []
    for s in sorted(pool, key=SecantSet.sort_key):
        if s in seen:
            continue
        orbit = dihedral_orbit(g, s)
        if not orbit <= pool:
            raise ValueError(f"input is not closed under the dihedral action (from {s!r})")
        seen |= orbit
        classes.append((min(orbit, key=SecantSet.sort_key), len(orbit)))
    return classes
