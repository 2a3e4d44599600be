"""Exact binomial sums behind the Msaft count.

Everything here is integer arithmetic.  The closed forms that carry a factor
1/2 or 1/4 are evaluated as ``numerator // denominator`` after checking that
the division is exact, so no rationals or floats ever appear.
"""

from __future__ import annotations

import enum
import math
from functools import lru_cache
from typing import NamedTuple


def binom(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ValueError(f"binom needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=64)
def _row(n: int) -> tuple:
    return tuple(math.comb(n, k) for k in range(n + 1))


def _b(row: tuple, k: int) -> int:
    return row[k] if 0 <= k < len(row) else 0


def h(i: int, j: int) -> int:
    return i - j - 1 if i >= j else j - i - 1


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


class IdentityId(enum.Enum):
    EASY1 = "easy1"
    EASY2 = "easy2"
    EASY3 = "easy3"
    BINOM_TAIL = "binomtail"
    KWADRATY = "kwadraty"
    MIESZANE = "mieszane"
    BINOMIAL_EQ = "binomialeq"


class IdentityCheck(NamedTuple):
    identity: IdentityId
    n: int
    lhs: object
    rhs: object
    equal: bool


def _easy1(n):
    return sum(_row(n)), 2 ** n


def _easy2(n):
    return sum(c * c for c in _row(n)), binom(2 * n, n)


def _easy3(n):
    row = _row(n)
    return (sum(row[0::2]), sum(row[1::2])), (2 ** (n - 1), 2 ** (n - 1))


def _binomtail(n):
    row, m = _row(n), n // 2
    lhs = sum(_b(row, 2 * i) * _b(row, 2 * j) for i in range(m + 1) for j in range(m + 1))
    return lhs, 2 ** (2 * n - 2)


def _kwadraty(n):
    row, m = _row(n), n // 2
    lhs = sum(_b(row, i + j) ** 2 + _b(row, h(i, j)) ** 2
              for i in range(m + 1) for j in range(m + 1))
    factor = n + 2 if n % 2 == 0 else n
    return lhs, _exact_div(factor * binom(2 * n, n), 2)


def _mieszane(n):
    row, m = _row(n), n // 2
    lhs = sum(_b(row, i + j) * _b(row, h(i, j)) for i in range(m + 1) for j in range(m + 1))
    rhs = 2 ** (2 * n - 2)
    if n % 2:
        rhs -= _exact_div(binom(2 * n, n), 2)
    return lhs, rhs


def _binomialeq(n):
    row, m = _row(n), n // 2
    lhs = 0
    for i in range(m + 1):
        for j in range(m + 1):
            e = _b(row, i + j) - _b(row, i - j - 1) - _b(row, j - i - 1)
            lhs += e * e - _b(row, 2 * i) * _b(row, 2 * j)
    rhs = _exact_div((n + 2) * binom(2 * n, n), 2) - 3 * 2 ** (2 * n - 2)
    return lhs, rhs


_SIDES = {
    IdentityId.EASY1: _easy1,
    IdentityId.EASY2: _easy2,
    IdentityId.EASY3: _easy3,
    IdentityId.BINOM_TAIL: _binomtail,
    IdentityId.KWADRATY: _kwadraty,
    IdentityId.MIESZANE: _mieszane,
    IdentityId.BINOMIAL_EQ: _binomialeq,
}


def verify_identity(identity: IdentityId, n: int) -> IdentityCheck:
    """Evaluate both sides of ``identity`` at ``n`` and compare them."""
    if n < 1:
        raise ValueError(f"identities are stated for n >= 1, got {n}")
    lhs, rhs = _SIDES[IdentityId(identity)](n)
    return IdentityCheck(IdentityId(identity), n, lhs, rhs, lhs == rhs)


def verify_all_identities(max_n: int, min_n: int = 1) -> list:
    """Every identity for every ``n`` in ``min_n..max_n``; returns the failures."""
    failures = []
    for n in range(min_n, max_n + 1):
        for ident in IdentityId:
            check = verify_identity(ident, n)
            if not check.equal:
                failures.append(check)
    return failures


def msaft_count_closed(n: int) -> int:
    """``(n+2)/4 * C(2n, n) - 3 * 2**(2n-3)``, the number of Msafts."""
    if n < 3:
        raise ValueError(f"closed form is used for n >= 3, got {n}")
    value = _exact_div((n + 2) * binom(2 * n, n) - 3 * 2 ** (2 * n - 1), 4)
    if value < 0:
        raise ArithmeticError(f"closed form is negative at n={n}")
    return value
