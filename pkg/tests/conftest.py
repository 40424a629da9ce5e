"""Brute-force oracles shared by the test modules.

These deliberately avoid the package's search code: membership is read off
the definitions position by position, and containment tries every
subsequence.
"""

from itertools import combinations, permutations

import pytest


def first_kind_oracle(p):
    # every even value is followed by something smaller, every odd value by
    # something larger or ends the word
    if len(p) % 2:
        return False
    for i, v in enumerate(p):
        nxt = p[i + 1] if i + 1 < len(p) else None
        if v % 2 == 0 and (nxt is None or nxt > v):
            return False
        if v % 2 == 1 and nxt is not None and nxt < v:
            return False
    return True


def second_kind_oracle(p):
    if len(p) % 2:
        return False
    return all((v < i) if i % 2 == 0 else (v >= i) for i, v in enumerate(p, start=1))


def pattern_of(values):
    ranks = sorted(values)
    return tuple(ranks.index(v) + 1 for v in values)


def contains_oracle(host, pattern):
    k = len(pattern)
    return any(pattern_of([host[i] for i in idx]) == tuple(pattern) for idx in combinations(range(len(host)), k))


def brute_family(oracle, n, patterns=()):
    return sorted(
        p
        for p in permutations(range(1, 2 * n + 1))
        if oracle(p) and not any(contains_oracle(p, t) for t in patterns)
    )


@pytest.fixture(scope="session")
def oracles():
    class O:
        first = staticmethod(first_kind_oracle)
        second = staticmethod(second_kind_oracle)
        contains = staticmethod(contains_oracle)
        family = staticmethod(brute_family)

    return O
