"""Cubic minor generators of the cyclic ideal and their Groebner certificate.

For every cyclic interval ``[a, b]`` with at least three vertices whose
complementary interval ``[b, a]`` (sharing only ``a`` and ``b``) also has at
least three, every 3x3 minor of the generic symmetric matrix with rows in
``[a, b]`` and columns in ``[b, a]`` is a generator.  Minors that agree up to
sign are kept once, with a positive leading coefficient.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from cyclicggm.msafts import BRUTEFORCE_MAX_N, EnumerationBoundError
from cyclicggm.polynomial import (
    Polynomial,
    TermOrder,
    is_squarefree,
    mono_coprime,
    reduce,
    s_polynomial,
    term_order,
)
from cyclicggm.secants import NGon, SecantSet

GROEBNER_MAX_N = 6


def _perm_sign(p: tuple) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symmetric_minor(order: TermOrder, rows: tuple, cols: tuple) -> Polynomial:
    """Determinant of the ``rows x cols`` block of the generic symmetric matrix."""
    g = order.g
    terms: dict = {}
    for p in permutations(range(len(cols))):
        m = order.monomial(g.secant(r, cols[p[k]]) for k, r in enumerate(rows))
        terms[m] = terms.get(m, 0) + _perm_sign(p)
    return Polynomial(order, terms)


def cyclic_interval(n: int, a: int, b: int) -> tuple:
    """Vertices met walking upward from ``a`` to ``b`` (mod n), both included."""
    return tuple((a + t) % n for t in range((b - a) % n + 1))


@dataclass(frozen=True)
class StMinor:
    poly: Polynomial = field(compare=False)
    rows: tuple
    cols: tuple
    interval: tuple


@dataclass
class GeneratorSet:
    g: NGon
    order: TermOrder
    minors: list
    raw_count: int = 0

    def __len__(self) -> int:
        return len(self.minors)

    def __iter__(self):
        return iter(self.minors)

    def polynomials(self) -> list:
        return [m.poly for m in self.minors]


@lru_cache(maxsize=None)
def generate_st_minors(g: NGon) -> GeneratorSet:
    n = g.n
    order = term_order(g)
    seen: dict = {}
    minors = []
    raw = 0
    for a in range(n):
        for length in range(3, n):
            b = (a + length - 1) % n
            rows_pool = cyclic_interval(n, a, b)
            cols_pool = cyclic_interval(n, b, a)
            if len(cols_pool) < 3:
                continue
            for rows in combinations(rows_pool, 3):
                for cols in combinations(cols_pool, 3):
                    raw += 1
                    poly = symmetric_minor(order, rows, cols)
                    if poly.is_zero():
                        continue
                    poly = poly.sign_normalized()
                    key = frozenset(poly.terms.items())
                    if key in seen:
                        continue
                    seen[key] = len(minors)
                    minors.append(StMinor(poly, rows, cols, (a, b)))
    return GeneratorSet(g, order, minors, raw)


def leading_monomial(order: TermOrder, p: Polynomial) -> tuple:
    return p.leading_monomial()


def monomial_support(order: TermOrder, m: tuple) -> SecantSet:
    return SecantSet.of(order.g, order.factors(m))


def leading_ideal(g: NGon) -> set:
    """Leading monomials of all generators."""
    gens = generate_st_minors(g)
    return {leading_monomial(gens.order, m.poly) for m in gens}


def leading_supports(g: NGon) -> set:
    """Leading monomials as secant sets; each is checked to be a square-free cubic."""
    order = term_order(g)
    out = set()
    for m in leading_ideal(g):
        if not is_squarefree(m) or sum(m) != 3:
            raise AssertionError(f"leading monomial {order.format_monomial(m)} is not a square-free cubic")
        out.add(monomial_support(order, m))
    return out


@dataclass
class SPairReport:
    n: int
    num_generators: int
    use_coprime_criterion: bool
    pairs_total: int = 0
    pairs_skipped: int = 0
    pairs_reduced: int = 0
    nonzero: list = field(default_factory=list)
    fractional: int = 0
    aborted: bool = False
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.aborted and not self.nonzero

    def summary(self) -> str:
        if self.aborted:
            state = f"ABORTED after {self.pairs_reduced} reductions"
        elif self.nonzero:
            state = f"{len(self.nonzero)} S-pairs with nonzero remainder"
        else:
            state = "all S-pairs reduce to zero"
        return (f"n={self.n}: {self.num_generators} generators, {self.pairs_total} pairs, "
                f"{self.pairs_skipped} skipped (coprime), {self.pairs_reduced} reduced: {state}")


def s_pair_check(g: NGon, use_coprime_criterion: bool = True, max_n: int = GROEBNER_MAX_N,
                 max_seconds: float | None = None) -> SPairReport:
    """Reduce every S-polynomial of two generators against all generators.

    An empty ``nonzero`` list certifies the generators are a Groebner basis
    of the ideal they generate.  With ``use_coprime_criterion`` pairs whose
    leading monomials share no variable are skipped.  ``max_seconds`` stops
    early and marks the report aborted.
    """
    if g.n > max_n:
        raise EnumerationBoundError(f"S-pair check is capped at n={max_n}, got n={g.n}")
    start = time.monotonic()
    gens = generate_st_minors(g)
    polys = gens.polynomials()
    report = SPairReport(g.n, len(polys), use_coprime_criterion)
    for i, j in combinations(range(len(polys)), 2):
        report.pairs_total += 1
        f, h = polys[i], polys[j]
        if use_coprime_criterion and mono_coprime(f.leading_monomial(), h.leading_monomial()):
            report.pairs_skipped += 1
            continue
        if max_seconds is not None and time.monotonic() - start > max_seconds:
            report.aborted = True
            break
        r = reduce(gens.order, s_polynomial(f, h), polys)
        report.pairs_reduced += 1
        if not r.has_integer_coefficients():
            report.fractional += 1
        if not r.is_zero():
            report.nonzero.append((i, j, r))
    report.seconds = time.monotonic() - start
    return report


def minimal_transversals(edges: list) -> list:
    """Minimal vertex sets meeting every edge (bitmasks), by Berge's method.

    Edges are absorbed one at a time.  A transversal that misses the new
    edge is extended by each vertex of that edge; an extension by ``v`` is
    dropped when an old transversal through ``v`` is already inside it.
    """
    covers = [0]
    for e in edges:
        hit = [c for c in covers if c & e]
        missed = [c for c in covers if not c & e]
        by_vertex: dict = {}
        for c in hit:
            x = c & e
            while x:
                low = x & -x
                by_vertex.setdefault(low, []).append(c)
                x ^= low
        new = list(hit)
        x = e
        while x:
            low = x & -x
            through = by_vertex.get(low, ())
            for c in missed:
                cand = c | low
                if not any(d & ~cand == 0 for d in through):
                    new.append(cand)
            x ^= low
        covers = new
    return covers


def initial_components(g: NGon, max_n: int = BRUTEFORCE_MAX_N) -> list:
    """Maximal variable sets containing no leading-monomial support, index-sorted.

    These span the irreducible components of the zero set of the initial
    ideal; they are the complements of the minimal transversals of the
    supports.
    """
    if g.n > max_n:
        raise EnumerationBoundError(f"component enumeration is capped at n={max_n}, got n={g.n}")
    full = (1 << g.num_secants) - 1
    edges = sorted(s.bits for s in leading_supports(g))
    comps = {SecantSet(g.n, full & ~t) for t in minimal_transversals(edges)}
    return sorted(comps, key=SecantSet.sort_key)
