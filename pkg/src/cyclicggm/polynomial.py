"""Sparse polynomials in the secant variables under a diagonal-first lex order.

Variables are ranked so that rank 0 is the largest: a variable ``s_ij`` is
larger the smaller ``|i - j|`` is, ties going to the smaller ``(i, j)``.  A
monomial is the tuple of its exponents listed by rank, so comparing two
monomials in the lex order is plain tuple comparison.

Coefficients are ``int`` or ``Fraction``; quotients that happen to be whole
are stored back as ``int``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from cyclicggm.secants import NGon, Secant, all_secants


class TermOrder:
    """Lex order on monomials in the ``C(n+1, 2)`` secant variables."""

    def __init__(self, g: NGon):
        self.g = g
        self.variables = tuple(sorted(all_secants(g), key=lambda s: (s.v - s.u, s.u, s.v)))
        self.rank = {s: r for r, s in enumerate(self.variables)}

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrder) and other.g == self.g

    def __hash__(self) -> int:
        return hash(("TermOrder", self.g))

    def variable(self, s: Secant) -> tuple:
        exps = [0] * self.num_vars
        exps[self.rank[s]] = 1
        return tuple(exps)

    def monomial(self, secants: Iterable[Secant]) -> tuple:
        """Product of the variables of ``secants`` (repeats raise the exponent)."""
        exps = [0] * self.num_vars
        for s in secants:
            exps[self.rank[s]] += 1
        return tuple(exps)

    def one(self) -> tuple:
        return (0,) * self.num_vars

    def factors(self, m: tuple) -> list:
        """Secants of ``m`` with multiplicity, largest variable first."""
        out = []
        for r, e in enumerate(m):
            out.extend([self.variables[r]] * e)
        return out

    def format_monomial(self, m: tuple, one_indexed: bool = False) -> str:
        if not any(m):
            return "1"
        shift = 1 if one_indexed else 0
        parts = []
        for r, e in enumerate(m):
            if e:
                s = self.variables[r]
                name = f"s{s.u + shift}{s.v + shift}" if self.g.n + shift <= 10 else f"s{s.u + shift}_{s.v + shift}"
                parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)


@lru_cache(maxsize=None)
def term_order(g: NGon) -> TermOrder:
    return TermOrder(g)


def compare_monomials(order: TermOrder, m1: tuple, m2: tuple) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    if len(m1) != order.num_vars or len(m2) != order.num_vars:
        raise ValueError("monomial length does not match the term order")
    return (m1 > m2) - (m1 < m2)


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: tuple, a: tuple) -> tuple:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_degree(m: tuple) -> int:
    return sum(m)


def is_squarefree(m: tuple) -> bool:
    return all(e <= 1 for e in m)


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _quotient(a, b):
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _normalize(Fraction(a) / Fraction(b))


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("order", "terms", "_sorted")

    def __init__(self, order: TermOrder, terms: Mapping[tuple, Rational] | None = None):
        self.order = order
        self.terms = {m: _normalize(c) for m, c in (terms or {}).items() if c != 0}
        self._sorted = None

    @classmethod
    def monomial(cls, order: TermOrder, m: tuple, coeff=1) -> "Polynomial":
        return cls(order, {m: coeff})

    @classmethod
    def constant(cls, order: TermOrder, c) -> "Polynomial":
        return cls(order, {order.one(): c})

    def sorted_terms(self) -> list:
        """``(monomial, coefficient)`` pairs, largest monomial first."""
        if self._sorted is None:
            self._sorted = sorted(self.terms.items(), reverse=True)
        return self._sorted

    def is_zero(self) -> bool:
        return not self.terms

    def leading_term(self) -> tuple:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def leading_monomial(self) -> tuple:
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.order == other.order and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.order, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.order, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = mono_mul(m1, m2)
                    out[m] = out.get(m, 0) + c1 * c2
            return Polynomial(self.order, out)
        return Polynomial(self.order, {m: c * other for m, c in self.terms.items()})

    __rmul__ = __mul__

    def mul_term(self, m: tuple, c) -> "Polynomial":
        return Polynomial(self.order, {mono_mul(m, k): v * c for k, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        return Polynomial(self.order, {m: _quotient(c, lc) for m, c in self.terms.items()})

    def sign_normalized(self) -> "Polynomial":
        """``self`` or ``-self``, whichever has a positive leading coefficient."""
        return -self if self.leading_coefficient() < 0 else self

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def format(self, one_indexed: bool = False) -> str:
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            body = self.order.format_monomial(m, one_indexed)
            if body == "1":
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if k == 0:
                out.append("-" + body if c < 0 else body)
            else:
                out.append(f" {'-' if c < 0 else '+'} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.format()})"


def reduce(order: TermOrder, p: Polynomial, divisors: list) -> Polynomial:
    """Remainder of ``p`` on multivariate division by ``divisors``.

    The leading term of the running polynomial is cancelled by the first
    divisor (in list order) whose leading monomial divides it; otherwise it
    moves to the remainder.  The result has no term divisible by any
    divisor's leading monomial.
    """
    heads = []
    for d in divisors:
        if d.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
        lm, lc = d.leading_term()
        heads.append((lm, lc, list(d.terms.items())))
    work = dict(p.terms)
    remainder: dict = {}
    while work:
        m = max(work)
        c = work[m]
        for lm, lc, dterms in heads:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                f = _quotient(c, lc)
                for dm, dc in dterms:
                    k = mono_mul(q, dm)
                    v = work.get(k, 0) - f * dc
                    if v:
                        work[k] = _normalize(v)
                    else:
                        work.pop(k, None)
                break
        else:
            remainder[m] = c
            del work[m]
    return Polynomial(order, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, cf = f.leading_term()
    lg, cg = g.leading_term()
    lcm = mono_lcm(lf, lg)
    return f.mul_term(mono_div(lcm, lf), _quotient(1, cf)) - g.mul_term(mono_div(lcm, lg), _quotient(1, cg))
