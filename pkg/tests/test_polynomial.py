from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cyclicggm.ideal import generate_st_minors
from cyclicggm.polynomial import (
    Polynomial,
    compare_monomials,
    is_squarefree,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    reduce,
    s_polynomial,
    term_order,
)
from cyclicggm.secants import NGon, Secant

O5 = term_order(NGon(5))


def S(a, b):
    return Secant(min(a, b), max(a, b))


def mono(order, *pairs):
    return order.monomial(S(a, b) for a, b in pairs)


def test_variable_ranking():
    o = term_order(NGon(4))
    assert o.variables[:4] == (S(0, 0), S(1, 1), S(2, 2), S(3, 3))
    assert o.variables[4:7] == (S(0, 1), S(1, 2), S(2, 3))
    # plain difference, not cyclic: {0,3} is the smallest variable
    assert o.variables[-1] == S(0, 3)


def test_compare_examples():
    o = O5
    assert compare_monomials(o, mono(o, (0, 0)), mono(o, (0, 1))) == 1
    assert compare_monomials(o, mono(o, (0, 4), (1, 3), (2, 2)), mono(o, (0, 3), (1, 4), (2, 2))) == 1
    assert compare_monomials(o, mono(o, (0, 1), (0, 1)), mono(o, (0, 1), (0, 2))) == 1
    assert compare_monomials(o, mono(o, (0, 2)), mono(o, (0, 2))) == 0
    assert compare_monomials(o, o.one(), mono(o, (0, 4))) == -1
    with pytest.raises(ValueError):
        compare_monomials(o, (1,), o.one())


monomials = st.lists(st.integers(0, 2), min_size=O5.num_vars, max_size=O5.num_vars).map(tuple)


@given(monomials, monomials, monomials)
@settings(max_examples=300, deadline=None)
def test_order_is_a_monomial_order(a, b, c):
    ab, ba = compare_monomials(O5, a, b), compare_monomials(O5, b, a)
    assert ab == -ba and (ab == 0) == (a == b)
    assert compare_monomials(O5, mono_mul(a, c), mono_mul(b, c)) == ab
    assert compare_monomials(O5, a, O5.one()) >= 0
    if ab >= 0 and compare_monomials(O5, b, c) >= 0:
        assert compare_monomials(O5, a, c) >= 0


@given(monomials, monomials)
def test_monomial_helpers(a, b):
    lcm = mono_lcm(a, b)
    assert mono_divides(a, lcm) and mono_divides(b, lcm)
    assert mono_mul(mono_div(lcm, a), a) == lcm
    assert mono_coprime(a, b) == (lcm == mono_mul(a, b))
    assert is_squarefree(a) == all(e <= 1 for e in a)


def to_sympy(p):
    syms = sympy.symbols(f"x0:{p.order.num_vars}")
    return sum((sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c)
               * sympy.Mul(*[x ** e for x, e in zip(syms, m)]) for m, c in p.terms.items()), syms


coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))
polys = st.dictionaries(monomials, coeffs, max_size=5).map(lambda t: Polynomial(O5, t))


@given(polys, polys)
@settings(max_examples=100, deadline=None)
def test_arithmetic_matches_sympy(p, q):
    (ps, syms), (qs, _) = to_sympy(p), to_sympy(q)
    assert sympy.expand(to_sympy(p * q)[0] - ps * qs) == 0
    assert sympy.expand(to_sympy(p + q)[0] - ps - qs) == 0
    assert sympy.expand(to_sympy(p - q)[0] - ps + qs) == 0
    assert (p - p).is_zero()


def test_leading_term_and_zero():
    p = Polynomial(O5, {mono(O5, (0, 1)): 2, mono(O5, (0, 0)): -3, O5.one(): 1})
    assert p.leading_term() == (mono(O5, (0, 0)), -3)
    assert p.sign_normalized().leading_coefficient() == 3
    assert p.monic().leading_coefficient() == 1
    assert p.monic().terms[mono(O5, (0, 1))] == Fraction(-2, 3)
    with pytest.raises(ValueError):
        Polynomial(O5).leading_term()
    assert Polynomial(O5, {O5.one(): 0}).is_zero()


def test_reduce_examples():
    gens = generate_st_minors(NGon(5)).polynomials()
    g = gens[0]
    assert reduce(O5, g, [g]).is_zero()
    s00 = Polynomial.monomial(O5, mono(O5, (0, 0)))
    assert reduce(O5, s00 * g, [g]).is_zero()
    one = Polynomial.constant(O5, 1)
    assert reduce(O5, one, gens) == one
    with pytest.raises(ValueError):
        reduce(O5, one, [Polynomial(O5)])


@given(polys)
@settings(max_examples=100, deadline=None)
def test_remainder_has_no_reducible_term(p):
    gens = generate_st_minors(NGon(5)).polynomials()
    r = reduce(O5, p, gens)
    heads = [h.leading_monomial() for h in gens]
    assert not any(mono_divides(h, m) for m in r.terms for h in heads)


def test_s_polynomial_cancels_leading_terms():
    gens = generate_st_minors(NGon(5)).polynomials()
    f, g = gens[0], gens[1]
    lcm = mono_lcm(f.leading_monomial(), g.leading_monomial())
    s = s_polynomial(f, g)
    assert lcm not in s.terms
    assert s.is_zero() or compare_monomials(O5, s.leading_monomial(), lcm) == -1


def test_format():
    p = Polynomial(O5, {mono(O5, (0, 0), (0, 0)): 2, mono(O5, (1, 3)): -1, O5.one(): 4})
    assert p.format() == "2*s00^2 - s13 + 4"
    assert p.format(one_indexed=True) == "2*s11^2 - s24 + 4"
    assert Polynomial(O5).format() == "0"
