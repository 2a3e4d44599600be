from functools import lru_cache

import pytest

from cyclicggm.msafts import enumerate_msafts_bruteforce, enumerate_msafts_via_walks
from cyclicggm.secants import NGon


@lru_cache(maxsize=None)
def bruteforce(n):
    return tuple(enumerate_msafts_bruteforce(NGon(n)))


@lru_cache(maxsize=None)
def walks(n):
    return tuple(enumerate_msafts_via_walks(NGon(n)))


@pytest.fixture(scope="session")
def msafts_by_bruteforce():
    return bruteforce


@pytest.fixture(scope="session")
def msafts_by_walks():
    return walks
