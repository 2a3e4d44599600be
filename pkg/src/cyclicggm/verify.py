"""Cross-checks between the independent constructions, grouped per n.

Each ``check_*`` function returns a list of :class:`Check` records rather
than raising, so a caller can report every failure in one run.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from cyclicggm import binomials, ideal, lattice, msafts
from cyclicggm.secants import (
    NGon,
    SecantSet,
    all_secants,
    is_forbidden_ktuple,
    is_forbidden_triple,
    parallel_family,
)

WALKS_MAX_N = 10
REFLECTION_MAX_N = 8
PATH_ENUM_MAX_N = 10
KTUPLE_MAX_N = 8
LEADING_MAX_N = 9
COMPONENTS_MAX_N = 7


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool | None  # None means skipped
    detail: str = ""

    def line(self) -> str:
        tag = {True: "PASS", False: "FAIL", None: "SKIP"}[self.ok]
        return f"[{tag}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _skip(name, why):
    return Check(name, None, why)


def msaft_counts(g: NGon, methods=("bruteforce", "walks", "lgv", "closed"),
                 bruteforce_max_n: int = msafts.BRUTEFORCE_MAX_N,
                 walks_max_n: int = WALKS_MAX_N) -> dict:
    """Msaft count per method; methods above their size bound are left out."""
    out = {}
    for m in methods:
        if m == "bruteforce" and g.n <= bruteforce_max_n:
            out[m] = len(msafts.enumerate_msafts_bruteforce(g, max_n=bruteforce_max_n))
        elif m == "walks" and g.n <= walks_max_n:
            out[m] = len(msafts.enumerate_msafts_via_walks(g))
        elif m == "lgv":
            out[m] = lattice.count_msafts_lgv(g)
        elif m == "closed":
            out[m] = binomials.msaft_count_closed(g.n)
    return out


def check_counts(g: NGon) -> list:
    counts = msaft_counts(g)
    ok = len(set(counts.values())) == 1
    detail = ", ".join(f"{k}={v}" for k, v in counts.items())
    return [Check(f"n={g.n} Msaft counts agree", ok, detail)]


def check_secant_predicates(g: NGon) -> list:
    checks = [Check(f"n={g.n} secant count", len(all_secants(g)) == g.num_secants,
                    str(len(all_secants(g))))]
    sizes = sum(len(parallel_family(g, k)) for k in range(g.n))
    checks.append(Check(f"n={g.n} parallel families partition the secants", sizes == g.num_secants))
    if g.n > KTUPLE_MAX_N:
        checks.append(_skip(f"n={g.n} middle vs cut-line triple test", f"n > {KTUPLE_MAX_N}"))
        return checks
    bad = [t for t in combinations(all_secants(g), 3)
           if is_forbidden_triple(g, *t) != is_forbidden_ktuple(g, t)]
    checks.append(Check(f"n={g.n} middle vs cut-line triple test", not bad, f"{len(bad)} disagreements"))
    return checks


def msaft_structure_violations(g: NGon, m: SecantSet) -> list:
    """Reasons ``m`` fails the size, family, walk or neighbour conditions."""
    bad = []
    if len(m) != 2 * g.n:
        bad.append(f"size {len(m)}")
    if set(msafts.family_counts(g, m)) != {2}:
        bad.append("family counts " + str(msafts.family_counts(g, m)))
    try:
        walk = msafts.secant_walk(g, m)
        if not walk.is_single_cycle():
            bad.append("walk is not a single cycle")
    except msafts.WalkError as exc:
        bad.append(type(exc).__name__)
    if msafts.moving_lemma_violations(g, m):
        bad.append("neighbour conditions")
    return bad


def check_msaft_structure(g: NGon, pool: list | None = None) -> list:
    if pool is None:
        if g.n > WALKS_MAX_N:
            return [_skip(f"n={g.n} Msaft structure", f"n > {WALKS_MAX_N}")]
        pool = msafts.enumerate_msafts_via_walks(g)
    bad = [(m, msaft_structure_violations(g, m)) for m in pool]
    bad = [b for b in bad if b[1]]
    detail = f"{len(pool)} Msafts, {len(bad)} violating"
    if bad:
        detail += f"; first {bad[0][0]!r}: {', '.join(bad[0][1])}"
    checks = [Check(f"n={g.n} size 2n, two per family, unique walk, neighbour conditions", not bad, detail)]
    try:
        classes = msafts.dihedral_classes(g, pool)
        checks.append(Check(f"n={g.n} dihedral action permutes Msafts",
                            sum(size for _, size in classes) == len(pool), f"{len(classes)} classes"))
    except ValueError as exc:
        checks.append(Check(f"n={g.n} dihedral action permutes Msafts", False, str(exc)))
    return checks


def check_path_counts(g: NGon) -> list:
    sg = lattice.build_strip_graph(g)
    m = g.n // 2
    dp = lattice.path_matrix(g, "dp")
    closed = lattice.path_matrix(g, "closed")
    checks = [Check(f"n={g.n} DP path counts equal closed form", dp == closed)]
    sym = all(closed[i, j] == closed[j, i] for i in range(m + 1) for j in range(m + 1))
    diag = all(closed[i, i] == binomials.binom(g.n, 2 * i) for i in range(m + 1))
    checks.append(Check(f"n={g.n} path matrix symmetric with e(i,i)=C(n,2i)", sym and diag))
    if g.n <= PATH_ENUM_MAX_N:
        enum_ok = all(sum(1 for _ in lattice.iter_paths(sg, i, j)) == closed[i, j]
                      for i in range(m + 1) for j in range(m + 1))
        checks.append(Check(f"n={g.n} enumerated paths equal closed form", enum_ok))
        unb = all(len(lattice.unbounded_paths(g.n, i, j)) == lattice.e_unbounded_closed(g, i, j)
                  for i in range(-2, m + 3) for j in range(-2, m + 3))
        checks.append(Check(f"n={g.n} unbounded paths equal C(n, i+j)", unb))
    else:
        checks.append(_skip(f"n={g.n} path enumeration", f"n > {PATH_ENUM_MAX_N}"))
    return checks


def reflection_violations(n: int) -> list:
    """Failures of the disjoint split and the two reflection bijections at ``n``."""
    g = NGon(n)
    bad = []
    for i in range(n // 2 + 1):
        for j in range(n // 2 + 1):
            paths = lattice.unbounded_paths(n, i, j)
            inside = [p for p in paths if lattice.in_strip(p, n)]
            top = [p for p in paths if lattice.touches(p, n, lattice.TOP)]
            bottom = [p for p in paths if lattice.touches(p, n, lattice.BOTTOM)]
            if set(top) & set(bottom):
                bad.append((i, j, "touches both lines"))
            if len(inside) + len(top) + len(bottom) != len(paths):
                bad.append((i, j, "split is not a partition"))
            if len(inside) != lattice.e_closed(g, i, j):
                bad.append((i, j, "strip count"))
            for boundary, group, target in ((lattice.BOTTOM, bottom, (i, -j - 1)),
                                            (lattice.TOP, top, (-i - 1, j))):
                images = [lattice.reflect_path(p, n, boundary) for p in group]
                if any(lattice.reflect_path(q, n, boundary) != p for p, q in zip(group, images)):
                    bad.append((i, j, f"{boundary} reflection is not an involution"))
                ends = {(lattice.label_of_start(q.start), lattice.label_of_end(n, q.end)) for q in images}
                if images and ends != {target}:
                    bad.append((i, j, f"{boundary} endpoint shift"))
                if set(images) != set(lattice.unbounded_paths(n, *target)):
                    bad.append((i, j, f"{boundary} reflection is not onto"))
    return bad


def check_reflection(g: NGon) -> list:
    if g.n > REFLECTION_MAX_N:
        return [_skip(f"n={g.n} reflection bijections", f"n > {REFLECTION_MAX_N}")]
    bad = reflection_violations(g.n)
    return [Check(f"n={g.n} reflection bijections", not bad, f"{len(bad)} failures")]


def check_lgv_pairs(g: NGon) -> list:
    if g.n > WALKS_MAX_N:
        return [_skip(f"n={g.n} disjoint pairs per label pair", f"n > {WALKS_MAX_N}")]
    sg = lattice.build_strip_graph(g)
    terms = lattice.lgv_terms(g)
    bad = []
    for a, value in terms.items():
        pairs = lattice.enumerate_disjoint_path_pairs(sg, a)
        if len(pairs) != value or not all(p.swapped for p in pairs):
            bad.append(a)
    return [Check(f"n={g.n} disjoint pairs per label pair equal -det", not bad, f"{len(terms)} label pairs")]


def check_identities(max_n: int) -> list:
    failures = binomials.verify_all_identities(max_n)
    detail = f"n=1..{max_n}, {len(binomials.IdentityId)} identities"
    if failures:
        detail += f"; first failure {failures[0].identity.value} at n={failures[0].n}"
    return [Check("binomial identities", not failures, detail)]


def check_leading(g: NGon) -> list:
    if g.n > LEADING_MAX_N:
        return [_skip(f"n={g.n} leading monomials are the forbidden triples", f"n > {LEADING_MAX_N}")]
    gens = ideal.generate_st_minors(g)
    supports = ideal.leading_supports(g)
    triples = {SecantSet.of(g, t) for t in msafts.enumerate_forbidden_triples(g)}
    six = all(len(m.poly) == 6 for m in gens)
    unit = all(abs(m.poly.leading_coefficient()) == 1 for m in gens)
    return [
        Check(f"n={g.n} leading monomials are the forbidden triples", supports == triples,
              f"{len(supports)} leading monomials, {len(triples)} triples"),
        Check(f"n={g.n} every minor has 6 terms and unit leading coefficient", six and unit,
              f"{len(gens)} generators"),
    ]


def check_components(g: NGon) -> list:
    if g.n > COMPONENTS_MAX_N:
        return [_skip(f"n={g.n} initial components are the Msafts", f"n > {COMPONENTS_MAX_N}")]
    comps = ideal.initial_components(g)
    ref = msafts.enumerate_msafts_bruteforce(g)
    equidim = all(len(c) == 2 * g.n for c in comps)
    degree = len(comps) == binomials.msaft_count_closed(g.n)
    return [
        Check(f"n={g.n} initial components are the Msafts", comps == ref, f"{len(comps)} components"),
        Check(f"n={g.n} initial ideal equidimensional of dimension 2n", equidim),
        Check(f"n={g.n} component count equals closed-form degree", degree),
    ]


def check_groebner(g: NGon, max_n: int = ideal.GROEBNER_MAX_N, max_seconds=None) -> list:
    if g.n > max_n:
        return [_skip(f"n={g.n} S-pairs reduce to zero", f"n > {max_n}")]
    out = []
    for flag in (True, False):
        r = ideal.s_pair_check(g, flag, max_n=max_n, max_seconds=max_seconds)
        name = f"n={g.n} S-pairs reduce to zero ({'with' if flag else 'without'} coprime skip)"
        out.append(Check(name, None if r.aborted else r.passed, r.summary()))
    return out


def verify_all(n: int, groebner_max_n: int = ideal.GROEBNER_MAX_N, max_seconds=None) -> list:
    g = NGon(n)
    checks = []
    checks += check_secant_predicates(g)
    checks += check_counts(g)
    checks += check_msaft_structure(g)
    checks += check_path_counts(g)
    checks += check_reflection(g)
    checks += check_lgv_pairs(g)
    checks += check_identities(max(n, 1))
    checks += check_leading(g)
    checks += check_components(g)
    checks += check_groebner(g, groebner_max_n, max_seconds)
    return checks
