from itertools import combinations, product

import pytest

from cyclicggm.binomials import binom
from cyclicggm.lattice import (
    BOTTOM,
    TOP,
    LatticePath,
    build_strip_graph,
    count_msafts_lgv,
    count_msafts_lgv_double_sum,
    count_paths,
    e_closed,
    e_unbounded_closed,
    enumerate_disjoint_path_pairs,
    iter_paths,
    label_secant,
    lattice_y,
    lgv_terms,
    path_matrix,
    reflect_path,
    secant_at,
    touches,
    unbounded_paths,
)
from cyclicggm.msafts import is_msaft
from cyclicggm.secants import NGon, Secant, right_neighbors


def walk_count(n, start, end, lo=None, hi=None):
    """Oracle: count n-step +-1 words from ``start`` to ``end`` inside [lo, hi]."""
    total = 0
    for word in product((1, -1), repeat=n):
        y, ok = start, True
        for s in word:
            y += s
            if (lo is not None and y < lo) or (hi is not None and y > hi):
                ok = False
                break
        total += ok and y == end
    return total


def oracle_e(n, i, j):
    return walk_count(n, -2 * i, 2 * j - n, lo=-n, hi=0)


def test_strip_graph_column_sizes():
    assert [len(c) for c in build_strip_graph(NGon(4)).columns] == [3, 2, 3, 2, 3]
    assert [len(c) for c in build_strip_graph(NGon(5)).columns] == [3] * 6
    assert [len(c) for c in build_strip_graph(NGon(3)).columns] == [2] * 4


@pytest.mark.parametrize("n", range(3, 12))
def test_strip_graph_structure(n):
    g = NGon(n)
    sg = build_strip_graph(g)
    assert sg.columns[0] == sg.columns[n]
    assert sg.columns[0][0] == Secant(0, 0)
    for k in range(n):
        for s in sg.columns[k]:
            targets = sg.successors(k, s)
            assert set(targets) == set(right_neighbors(g, s))
            assert all(t in sg.columns[k + 1] for t in targets)
    assert sg.num_vertices() == g.num_secants + n // 2 + 1


@pytest.mark.parametrize("n", range(3, 12))
def test_lattice_coordinates_match_strip_columns(n):
    g = NGon(n)
    sg = build_strip_graph(g)
    for i in range(n // 2 + 1):
        assert secant_at(g, 0, -2 * i) == label_secant(g, i)
        assert secant_at(g, n, 2 * i - n) == label_secant(g, i)
    for k in range(n):
        for s in sg.columns[k]:
            y = lattice_y(g, k, s)
            for t in sg.successors(k, s):
                assert abs(lattice_y(g, k + 1, t) - y) == 1


def test_count_paths_examples():
    sg = build_strip_graph(NGon(4))
    assert count_paths(sg, 0, 0) == 1
    assert count_paths(sg, 1, 1) == 6
    assert count_paths(sg, 0, 2) == 2


def test_e_closed_examples():
    assert e_closed(NGon(4), 0, 1) == 3
    assert e_closed(NGon(5), 1, 2) == 9
    assert e_closed(NGon(4), 2, 2) == 1


def test_n4_path_matrix():
    assert path_matrix(NGon(4)).entries == ((1, 3, 2), (3, 6, 3), (2, 3, 1))


@pytest.mark.parametrize("n", range(3, 11))
def test_dp_enumeration_and_closed_form_agree(n):
    g = NGon(n)
    sg = build_strip_graph(g)
    for i in range(n // 2 + 1):
        for j in range(n // 2 + 1):
            expected = oracle_e(n, i, j)
            assert count_paths(sg, i, j) == expected
            assert e_closed(g, i, j) == expected
            assert sum(1 for _ in iter_paths(sg, i, j)) == expected


def test_e_unbounded_examples():
    assert e_unbounded_closed(NGon(4), 0, 0) == 1
    assert e_unbounded_closed(NGon(4), 1, 1) == 6
    assert e_unbounded_closed(NGon(5), 0, 3) == 10


@pytest.mark.parametrize("n", range(3, 11))
def test_unbounded_counts(n):
    g = NGon(n)
    for i in range(-3, n // 2 + 3):
        for j in range(-3, n // 2 + 3):
            expected = walk_count(n, -2 * i, 2 * j - n)
            assert e_unbounded_closed(g, i, j) == expected
            assert len(unbounded_paths(n, i, j)) == expected


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13, 40, 64])
def test_path_matrix_symmetric_with_central_diagonal(n):
    pm = path_matrix(NGon(n))
    for i in range(pm.size):
        assert pm[i, i] == binom(n, 2 * i)
        for j in range(pm.size):
            assert pm[i, j] == pm[j, i]


def test_path_matrix_dp_matches_closed_up_to_64():
    for n in (20, 33, 64):
        assert path_matrix(NGon(n), "dp") == path_matrix(NGon(n), "closed")


def test_reflect_path_examples():
    n = 4
    # no 4-step path from y=-2 reaches y=-5
    assert not [p for p in unbounded_paths(n, 1, 1) if touches(p, n, BOTTOM)]
    assert binom(4, -1) == 0
    top = [p for p in unbounded_paths(n, 0, 2) if touches(p, n, TOP)]
    assert len(top) == 4 == e_unbounded_closed(NGon(n), -1, 2)
    images = {reflect_path(p, n, TOP) for p in top}
    assert images == set(unbounded_paths(n, -1, 2))


def test_reflection_is_an_involution():
    p = LatticePath(0, (1, -1, -1, 1, 1))
    q = reflect_path(p, 5, TOP)
    assert q.start == 2 and reflect_path(q, 5, TOP) == p
    r = LatticePath(-4, (-1, -1, 1, 1))
    s = reflect_path(r, 4, BOTTOM)
    assert s == LatticePath(-4, (-1, 1, -1, -1)) and reflect_path(s, 4, BOTTOM) == r


def test_reflect_rejects_non_touching_paths():
    with pytest.raises(ValueError):
        reflect_path(LatticePath(0, (-1, -1)), 4, TOP)


@pytest.mark.parametrize("n", range(3, 9))
def test_strip_top_bottom_partition(n):
    g = NGon(n)
    for i in range(n // 2 + 1):
        for j in range(n // 2 + 1):
            paths = unbounded_paths(n, i, j)
            top = {p for p in paths if touches(p, n, TOP)}
            bottom = {p for p in paths if touches(p, n, BOTTOM)}
            assert not top & bottom
            assert len(paths) == e_closed(g, i, j) + len(top) + len(bottom)
            assert len(bottom) == e_unbounded_closed(g, i, -j - 1)
            assert len(top) == e_unbounded_closed(g, -i - 1, j)


def test_lgv_examples():
    assert count_msafts_lgv(NGon(4)) == 9
    assert sorted(lgv_terms(NGon(4)).values()) == [3, 3, 3]
    assert count_msafts_lgv(NGon(5)) == 57
    assert sorted(lgv_terms(NGon(5)).values()) == [6, 20, 31]
    assert count_msafts_lgv(NGon(6)) == 312
    assert count_msafts_lgv(NGon(3)) == 1


@pytest.mark.parametrize("n", range(3, 65))
def test_lgv_sum_equals_halved_double_sum(n):
    assert count_msafts_lgv(NGon(n)) == count_msafts_lgv_double_sum(NGon(n))


def test_disjoint_pair_examples():
    sg4 = build_strip_graph(NGon(4))
    assert len(enumerate_disjoint_path_pairs(sg4, (0, 1))) == 3
    assert len(enumerate_disjoint_path_pairs(sg4, (0, 2))) == 3
    assert len(enumerate_disjoint_path_pairs(build_strip_graph(NGon(5)), (1, 2))) == 31


@pytest.mark.parametrize("n", range(3, 9))
def test_disjoint_pairs_are_msafts_and_counted_by_minus_det(n):
    g = NGon(n)
    sg = build_strip_graph(g)
    pm = path_matrix(g)
    for a in combinations(range(n // 2 + 1), 2):
        pairs = enumerate_disjoint_path_pairs(sg, a)
        assert len(pairs) == -pm.minor(*a)
        for p in pairs:
            assert p.swapped
            s = p.secant_set(g)
            assert len(s) == 2 * n
            assert is_msaft(g, s)
