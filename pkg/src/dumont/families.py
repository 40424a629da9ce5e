"""Dumont permutations of the first and second kinds, their complement-type
"Dumont-like" images, and the Genocchi numbers that count them.

Generation is a left-to-right backtracking search that only ever places a
value allowed by the kind's local rule, so the cost is proportional to the
size of the family rather than to ``(2n)!``. Pattern restrictions are pushed
into the search as well: avoidance is hereditary for prefixes, so a branch is
cut as soon as its newest entry completes an occurrence.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .errors import LimitExceeded, OddInput
from .perm import (
    Permutation,
    complement,
    ends_with_occurrence,
    parse_pattern_set,
    parse_permutation,
    reverse_complement,
)

__all__ = [
    "DumontKind",
    "DEFAULT_MAX_N",
    "max_n",
    "is_member",
    "iter_members",
    "generate",
    "count_avoiders",
    "extend_to_odd",
    "genocchi",
    "genocchi_table",
]

DEFAULT_MAX_N = 8


def max_n() -> int:
    """Generation cap on n (permutations of length 2n); DUMONT_MAX_N overrides."""
    raw = os.environ.get("DUMONT_MAX_N")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_N
    return int(raw)


class DumontKind(Enum):
    FIRST = "1"
    SECOND = "2"
    DUMONT_LIKE_FIRST = "dl1"
    DUMONT_LIKE_SECOND = "dl2"

    @classmethod
    def parse(cls, text) -> "DumontKind":
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower()):
                return kind
        raise ValueError(f"unknown Dumont kind {text!r}; expected one of 1, 2, dl1, dl2")


# --- membership ------------------------------------------------------------


def _is_first(p: Sequence[int]) -> bool:
    m = len(p)
    if m % 2:
        return False
    for i, v in enumerate(p):
        last = i == m - 1
        if v % 2 == 0:
            if last or p[i + 1] > v:
                return False
        elif not last and p[i + 1] < v:
            return False
    return True


def _is_second(p: Sequence[int]) -> bool:
    if len(p) % 2:
        return False
    for j, v in enumerate(p, start=1):
        if j % 2 == 0:
            if not v < j:
                return False
        elif not v >= j:
            return False
    return True


def is_member(kind: DumontKind, p: Sequence[int]) -> bool:
    """Decide membership straight from the defining conditions.

    >>> is_member(DumontKind.FIRST, (2, 1, 4, 3))
    True
    """
    kind = DumontKind.parse(kind)
    if kind is DumontKind.FIRST:
        return _is_first(p)
    if kind is DumontKind.SECOND:
        return _is_second(p)
    if kind is DumontKind.DUMONT_LIKE_FIRST:
        return _is_first(complement(p))
    return _is_second(reverse_complement(p))


# --- generation ------------------------------------------------------------


def _allowed(kind: DumontKind, m: int, i: int, prev: int, free: int) -> int:
    """Bitmask (bit v for value v) of the unused values the kind's local rule
    allows at 0-based position i, given the previous entry."""
    full = (1 << (m + 1)) - 2
    if kind is DumontKind.FIRST or kind is DumontKind.DUMONT_LIKE_FIRST:
        if i == 0:
            mask = free
        elif prev & 1:
            mask = free & ~((1 << (prev + 1)) - 1)
        else:
            mask = free & ((1 << prev) - 1)
        if i == m - 1:
            # first kind ends on an odd value, its complement on an even one
            return mask & (_ODD_BITS if kind is DumontKind.FIRST else _EVEN_BITS)
        # v odd needs a larger unused value after it, v even a smaller one
        rest = free
        out = 0
        while mask:
            low = mask & -mask
            mask ^= low
            v = low.bit_length() - 1
            if v & 1:
                if rest & ~((low << 1) - 1):
                    out |= low
            elif rest & (low - 1):
                out |= low
        return out
    j = i + 1
    if kind is DumontKind.SECOND:
        bound = (1 << j) - 1 if j % 2 == 0 else full & ~((1 << j) - 1)
    else:
        bound = (1 << (j + 1)) - 1 if j % 2 == 0 else full & ~((1 << (j + 1)) - 1)
    return free & bound


_ODD_BITS = sum(1 << v for v in range(1, 64, 2))
_EVEN_BITS = sum(1 << v for v in range(2, 64, 2))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


@lru_cache(maxsize=1 << 20)
def _completions(kind: DumontKind, m: int, i: int, prev: int, free: int) -> int:
    """Number of ways to finish a valid prefix; memoized on the search state.

    The local rules only look at the previous entry (first kinds) or the
    position (second kinds), so (prev, unused values) is a complete state.
    """
    if i == m:
        return 1
    mask = _allowed(kind, m, i, prev, free)
    if i == m - 1:
        return bin(mask).count("1")
    total = 0
    for v in _bits(mask):
        total += _completions(kind, m, i + 1, _state_prev(kind, v), free & ~(1 << v))
    return total


@lru_cache(maxsize=1 << 20)
def _children(kind: DumontKind, m: int, i: int, prev: int, free: int) -> tuple:
    """Viable moves (value, next state prev, remaining values) in increasing
    value order; moves with no completion are dropped."""
    out = []
    for v in _bits(_allowed(kind, m, i, prev, free)):
        rest = free & ~(1 << v)
        nprev = _state_prev(kind, v)
        if _completions(kind, m, i + 1, nprev, rest):
            out.append((v, nprev, rest))
    return tuple(out)


def _state_prev(kind: DumontKind, v: int) -> int:
    # second kinds ignore the previous entry; dropping it lets states be shared
    return v if kind is DumontKind.FIRST or kind is DumontKind.DUMONT_LIKE_FIRST else 0


def _search(kind: DumontKind, m: int, patterns: tuple, first: Optional[int] = None) -> Iterator[tuple]:
    """Yield the members of length m in lexicographic order.

    Every node visited has at least one completion, so the work is
    proportional to the output (times the length).
    """
    perm = [0] * m
    last = m - 1

    def extend(i: int, prev: int, free: int) -> Iterator[tuple]:
        for v, nprev, rest in _children(kind, m, i, prev, free):
            if i == 0 and first is not None and v != first:
                continue
            perm[i] = v
            if patterns and _completes(perm, i, patterns):
                continue
            if i == last:
                yield tuple(perm)
            else:
                yield from extend(i + 1, nprev, rest)

    if m == 0:
        return iter([()])
    return extend(0, 0, (1 << (m + 1)) - 2)


def _count(kind: DumontKind, m: int, patterns: tuple, first: Optional[int] = None) -> int:
    """Count the leaves of the _search tree without materializing them."""
    full = (1 << (m + 1)) - 2
    if m == 0:
        return 1
    if not patterns:
        return sum(
            _completions(kind, m, 1, nprev, rest)
            for v, nprev, rest in _children(kind, m, 0, 0, full)
            if first is None or v == first
        )
    perm = [0] * m
    last = m - 1

    def extend(i: int, prev: int, free: int) -> int:
        total = 0
        for v, nprev, rest in _children(kind, m, i, prev, free):
            if i == 0 and first is not None and v != first:
                continue
            perm[i] = v
            if _completes(perm, i, patterns):
                continue
            total += 1 if i == last else extend(i + 1, nprev, rest)
        return total

    return extend(0, 0, full)


def _completes(perm: list, i: int, patterns: tuple) -> bool:
    prefix = perm[: i + 1]
    return any(ends_with_occurrence(prefix, tau) for tau in patterns)


def _normalize_patterns(patterns: Optional[Iterable[Sequence[int]]]) -> tuple:
    if not patterns:
        return ()
    if isinstance(patterns, str):
        patterns = parse_pattern_set(patterns)
    pats = {tuple(parse_permutation(p)) if isinstance(p, str) else tuple(p) for p in patterns}
    return tuple(sorted(pats, key=lambda t: (len(t), t)))


def _check_cap(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = max_n()
    if n > cap:
        raise LimitExceeded(f"n={n} exceeds the generation cap {cap} (set DUMONT_MAX_N to raise it)")


def iter_members(kind: DumontKind, n: int, avoid: Optional[Iterable[Sequence[int]]] = None) -> Iterator[Permutation]:
    """Stream the length-2n members of ``kind`` in lexicographic order,
    optionally restricted to those avoiding every pattern in ``avoid``."""
    kind = DumontKind.parse(kind)
    _check_cap(n)
    for values in _search(kind, 2 * n, _normalize_patterns(avoid)):
        yield Permutation._trusted(values)


def generate(kind: DumontKind, n: int, avoid: Optional[Iterable[Sequence[int]]] = None) -> list[Permutation]:
    return list(iter_members(kind, n, avoid))


def _count_branch(args) -> int:
    return _count(*args)


def count_avoiders(
    kind: DumontKind,
    patterns: Optional[Iterable[Sequence[int]]],
    n: int,
    workers: int = 1,
) -> int:
    """Number of length-2n members of ``kind`` avoiding all of ``patterns``.

    With ``workers > 1`` the search tree is split by first value and the
    branches are counted in separate processes; the total does not depend on
    the schedule.
    """
    kind = DumontKind.parse(kind)
    _check_cap(n)
    pats = _normalize_patterns(patterns)
    m = 2 * n
    if workers <= 1 or m == 0:
        return _count(kind, m, pats)
    jobs = [(kind, m, pats, v) for v in range(1, m + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_branch, jobs))


def extend_to_odd(p: Sequence[int]) -> Permutation:
    """Append 2n+1 to a length-2n permutation (odd-length Dumont sets arise this way)."""
    if len(p) % 2:
        raise OddInput(f"expected even length, got {len(p)}")
    return Permutation(tuple(p) + (len(p) + 1,))


# --- Genocchi numbers ------------------------------------------------------


@lru_cache(maxsize=None)
def _seidel_rows(count: int) -> tuple[int, ...]:
    """First ``count`` unsigned Genocchi numbers G_2, G_4, ... via Seidel's triangle.

    Starting from [1], rows alternate between suffix sums (read right to left)
    and prefix sums with the final entry repeated; the last entry of each
    prefix-sum row is the next Genocchi number.
    """
    out = [1]
    row = [1]
    while len(out) < count:
        suffix = []
        acc = 0
        for x in reversed(row):
            acc += x
            suffix.append(acc)
        row = suffix[::-1]
        prefix = []
        acc = 0
        for x in row:
            acc += x
            prefix.append(acc)
        prefix.append(prefix[-1])
        row = prefix
        out.append(row[-1])
    return tuple(out[:count])


def genocchi_table(k_max: int) -> tuple[int, ...]:
    """Entries 0..k_max with entry k holding G_{2k} (entry 0 is a placeholder 0)."""
    return (0,) + _seidel_rows(k_max)[:k_max]


def genocchi(k: int) -> int:
    """Unsigned Genocchi number G_{2k}, k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _seidel_rows(k)[k - 1]
