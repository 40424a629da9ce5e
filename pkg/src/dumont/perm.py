"""Permutations in one-line notation, classical pattern containment and the
symmetry operations reversal, complement and reverse-complement.

Permutations are immutable tuples of the values ``1..m``. Everything here is a
pure function, so it is safe to share values across threads.
"""

from __future__ import annotations

import re
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import EmptyToken, MixedFormat, NotABijection, ParseError

__all__ = [
    "Permutation",
    "Symmetry",
    "parse_permutation",
    "parse_pattern_set",
    "format_permutation",
    "contains",
    "contains_naive",
    "find_occurrence",
    "count_occurrences",
    "avoids_all",
    "reversal",
    "complement",
    "reverse_complement",
    "map_pattern_set",
    "standardize",
]


class Permutation(tuple):
    """A permutation of ``{1, ..., m}`` in one-line notation.

    Behaves as a tuple of ints (so ordering is lexicographic and hashing is
    cheap) but refuses anything that is not a bijection.

    >>> Permutation([2, 1, 4, 3])
    Permutation('2143')
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        m = len(values)
        if sorted(values) != list(range(1, m + 1)):
            raise NotABijection(f"{values!r} is not a permutation of 1..{m}")
        return tuple.__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        # internal constructor for values already known to be a bijection
        return tuple.__new__(cls, values)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls._trusted(range(1, m + 1))

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r})"

    @property
    def size(self) -> int:
        return len(self)


_SEPARATORS = re.compile(r"[\s,]")


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2143"``, ``"2 1 4 3"`` or ``"10,1,2,...,9"``.

    The compact digit form is only meaningful when every value is at most 9;
    anything longer needs separators.
    """
    text = text.strip()
    if text in ("", "()", "(empty)", "ε", "e"):
        return Permutation._trusted(())
    if not _SEPARATORS.search(text):
        if not text.isdigit() or "0" in text:
            raise ParseError(f"compact permutation must use digits 1-9 only: {text!r}")
        return Permutation(int(ch) for ch in text)

    if "," in text:
        tokens = [tok.strip() for tok in text.split(",")]
        for tok in tokens:
            if not tok:
                raise EmptyToken(f"empty entry in {text!r}")
            if _SEPARATORS.search(tok):
                raise MixedFormat(f"mixed comma and whitespace separators in {text!r}")
    else:
        tokens = text.split()
    for tok in tokens:
        if not tok.isdigit():
            raise ParseError(f"not a positive integer: {tok!r}")
    return Permutation(int(tok) for tok in tokens)


def format_permutation(p: Sequence[int]) -> str:
    """Canonical text: compact digits when every value is <= 9, else spaced."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return " ".join(str(v) for v in p)


def parse_pattern_set(text: str) -> frozenset[Permutation]:
    """Comma-separated compact patterns, e.g. ``"2413,3142"``."""
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise EmptyToken(f"empty pattern in {text!r}")
        p = parse_permutation(tok)
        if len(p) == 0:
            raise ParseError("patterns must have length >= 1")
        out.add(p)
    return frozenset(out)


def standardize(values: Sequence[int]) -> tuple[int, ...]:
    """Replace values by their ranks, giving the order-isomorphic permutation."""
    ranks = {v: i for i, v in enumerate(sorted(values), start=1)}
    return tuple(ranks[v] for v in values)


# --- containment -----------------------------------------------------------


@lru_cache(maxsize=4096)
def _plan(pattern: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """For each pattern position t, the earlier positions holding the nearest
    smaller and nearest larger pattern values (-1 when there is none).

    Matching host values only against those two neighbours is enough to keep
    the partial match order-isomorphic.
    """
    plan = []
    for t, v in enumerate(pattern):
        lo, hi = -1, -1
        for s in range(t):
            w = pattern[s]
            if w < v and (lo < 0 or w > pattern[lo]):
                lo = s
            if w > v and (hi < 0 or w < pattern[hi]):
                hi = s
        plan.append((lo, hi))
    return tuple(plan)


def _occurrences(host: Sequence[int], pattern: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield 0-based occurrence position vectors in lexicographic order."""
    n, k = len(host), len(pattern)
    if k > n:
        return
    if k == 0:
        yield ()
        return
    plan = _plan(tuple(pattern))
    pos = [0] * k
    top = max(host) + 1

    def extend(t: int, start: int):
        lo, hi = plan[t]
        lo_v = host[pos[lo]] if lo >= 0 else 0
        hi_v = host[pos[hi]] if hi >= 0 else top
        for i in range(start, n - (k - 1 - t)):
            v = host[i]
            if lo_v < v < hi_v:
                pos[t] = i
                if t + 1 == k:
                    yield tuple(pos)
                else:
                    yield from extend(t + 1, i + 1)

    yield from extend(0, 0)


def _has_occurrence(host: Sequence[int], pattern: tuple[int, ...], plan, pinned_last: bool = False) -> bool:
    # Boolean-only variant of _occurrences without generator overhead. With
    # pinned_last the final pattern letter must sit at the host's last position.
    n, k = len(host), len(pattern)
    if k > n:
        return False
    pos = [0] * k
    top = max(host, default=0) + 1

    def extend(t: int, start: int) -> bool:
        lo, hi = plan[t]
        lo_v = host[pos[lo]] if lo >= 0 else 0
        hi_v = host[pos[hi]] if hi >= 0 else top
        if t + 1 == k and pinned_last:
            return lo_v < host[n - 1] < hi_v and start <= n - 1
        stop = n - (k - 1 - t)
        if pinned_last:
            stop = min(stop, n - 1)
        for i in range(start, stop):
            v = host[i]
            if lo_v < v < hi_v:
                if t + 1 == k:
                    return True
                pos[t] = i
                if extend(t + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def contains(host: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pattern``."""
    pattern = tuple(pattern)
    if len(pattern) == 0:
        return True
    return _has_occurrence(host, pattern, _plan(pattern))


def ends_with_occurrence(prefix: Sequence[int], pattern: tuple[int, ...]) -> bool:
    """True iff ``prefix`` has an occurrence of ``pattern`` using its last entry.

    Used for incremental pruning during generation: if a prefix avoids the
    pattern, extending it by one entry creates an occurrence only through that
    entry.
    """
    return _has_occurrence(prefix, pattern, _plan(pattern), pinned_last=True)


def contains_naive(host: Sequence[int], pattern: Sequence[int]) -> bool:
    """Reference implementation: try every subsequence of the right length."""
    target = tuple(pattern)
    return any(standardize(sub) == target for sub in combinations(host, len(target)))


def find_occurrence(host: Sequence[int], pattern: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Lexicographically least occurrence as 1-based positions, or None."""
    first = next(_occurrences(host, pattern), None)
    if first is None:
        return None
    return tuple(i + 1 for i in first)


def count_occurrences(host: Sequence[int], pattern: Sequence[int]) -> int:
    return sum(1 for _ in _occurrences(host, pattern))


def avoids_all(host: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains(host, tau) for tau in patterns)


# --- symmetries ------------------------------------------------------------


def reversal(p: Sequence[int]) -> Permutation:
    return Permutation._trusted(reversed(tuple(p)))


def complement(p: Sequence[int]) -> Permutation:
    m1 = len(p) + 1
    return Permutation._trusted(m1 - v for v in p)


def reverse_complement(p: Sequence[int]) -> Permutation:
    m1 = len(p) + 1
    return Permutation._trusted(m1 - v for v in reversed(tuple(p)))


class Symmetry(Enum):
    REVERSAL = "r"
    COMPLEMENT = "c"
    REVERSE_COMPLEMENT = "rc"

    def __call__(self, p: Sequence[int]) -> Permutation:
        return _SYMMETRY_FUNCS[self](p)


_SYMMETRY_FUNCS = {
    Symmetry.REVERSAL: reversal,
    Symmetry.COMPLEMENT: complement,
    Symmetry.REVERSE_COMPLEMENT: reverse_complement,
}


def map_pattern_set(patterns: Iterable[Sequence[int]], op: Symmetry) -> frozenset[Permutation]:
    return frozenset(op(p) for p in patterns)
