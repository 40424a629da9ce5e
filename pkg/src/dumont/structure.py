"""Executable structure theorems: decompositions, explicit bijections,
directly constructed avoider sets, and recursive shape templates.

Each structural template is available in two directions:

* ``matches_shape(tag, p)`` parses a permutation against the template at the
  top level, checking the recursive pieces only for family membership;
* ``template_instances(tag, n)`` builds every permutation the template can
  produce from smaller family members.

Comparing both against exhaustive generation checks the "if and only if" form
of each structure theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    InvalidComposition,
    InvalidDyckPath,
    MalformedStructure,
    NotInFamily,
    UnknownFamily,
    UnknownShape,
)
from .families import DumontKind, generate, is_member
from .perm import Permutation, avoids_all, complement, format_permutation, reverse_complement

__all__ = [
    "TheoremId",
    "DyckPath",
    "WeakComposition",
    "CycleDecomposition",
    "cycle_decomposition",
    "d2_231_to_composition",
    "composition_to_d2_231",
    "d2_3142_decompose",
    "d2_3142_to_dyck",
    "dyck_to_d2_3142",
    "dyck_paths",
    "compositions",
    "canonical_avoider",
    "matches_shape",
    "template_instances",
    "STRUCTURAL_TAGS",
    "CANONICAL_TAGS",
    "FAMILIES",
]


class TheoremId(Enum):
    MANSOUR_CATALAN_132 = "mansour-catalan-132"
    MANSOUR_CATALAN_231 = "mansour-catalan-231"
    MANSOUR_CATALAN_312 = "mansour-catalan-312"
    MANSOUR_CATALAN_D2_321 = "mansour-catalan-d2-321"
    D1_213 = "d1-213"
    D2_231 = "d2-231"
    D1_321 = "d1-321"
    D2_312 = "d2-312"
    D1_123 = "d1-123"
    D2_EMPTY_123 = "d2-empty-123"
    D2_EMPTY_213 = "d2-empty-213"
    D2_EMPTY_132 = "d2-empty-132"
    PAIR3_132_231 = "pair3-132-231"
    PAIR3_132_312 = "pair3-132-312"
    PAIR3_213_312 = "pair3-213-312"
    PAIR3_123_213 = "pair3-123-213"
    PAIR3_132_213 = "pair3-132-213"
    PAIR3_D2_231_321 = "pair3-d2-231-321"
    PAIR3_231_312 = "pair3-231-312"
    PAIR3_213_231_EMPTY = "pair3-213-231-empty"
    PAIR3_123_132_TWO = "pair3-123-132-two"
    D2_3142 = "d2-3142"
    CONJ_D2_4132 = "conj-d2-4132"
    LEMMA_4213_1342 = "lemma-4213-1342"
    D1_1342_1423 = "d1-1342-1423"
    D1_2341_2413 = "d1-2341-2413"
    D1_1342_2413 = "d1-1342-2413"
    D1_2341_1423 = "d1-2341-1423"
    D1_231_4213 = "d1-231-4213"
    D1_1342_4213 = "d1-1342-4213"
    D1_2413_3142 = "d1-2413-3142"
    D1_1423_4132 = "d1-1423-4132"
    D1_2413_4132_EQ_1423_3142 = "d1-2413-4132-eq-1423-3142"
    TABLE_4_1 = "table-4-1"
    GENOCCHI_TOTALS = "genocchi-totals"

    @classmethod
    def parse(cls, text) -> "TheoremId":
        if isinstance(text, cls):
            return text
        key = str(text).strip()
        for tag in cls:
            if key.lower() in (tag.value, tag.name.lower()):
                return tag
        from .errors import UnknownTheorem

        raise UnknownTheorem(f"unknown theorem {text!r}")


def _pats(*words: str) -> frozenset:
    return frozenset(tuple(int(ch) for ch in w) for w in words)


F1, F2 = DumontKind.FIRST, DumontKind.SECOND

# (kind, pattern set) whose avoiders each tag is about
FAMILIES: dict[TheoremId, tuple[DumontKind, frozenset]] = {
    TheoremId.MANSOUR_CATALAN_132: (F1, _pats("132")),
    TheoremId.MANSOUR_CATALAN_231: (F1, _pats("231")),
    TheoremId.MANSOUR_CATALAN_312: (F1, _pats("312")),
    TheoremId.MANSOUR_CATALAN_D2_321: (F2, _pats("321")),
    TheoremId.D1_213: (F1, _pats("213")),
    TheoremId.D2_231: (F2, _pats("231")),
    TheoremId.D1_321: (F1, _pats("321")),
    TheoremId.D2_312: (F2, _pats("312")),
    TheoremId.D1_123: (F1, _pats("123")),
    TheoremId.D2_EMPTY_123: (F2, _pats("123")),
    TheoremId.D2_EMPTY_213: (F2, _pats("213")),
    TheoremId.D2_EMPTY_132: (F2, _pats("132")),
    TheoremId.PAIR3_132_231: (F1, _pats("132", "231")),
    TheoremId.PAIR3_132_312: (F1, _pats("132", "312")),
    TheoremId.PAIR3_213_312: (F1, _pats("213", "312")),
    TheoremId.PAIR3_123_213: (F1, _pats("123", "213")),
    TheoremId.PAIR3_132_213: (F1, _pats("132", "213")),
    TheoremId.PAIR3_D2_231_321: (F2, _pats("231", "321")),
    TheoremId.PAIR3_231_312: (F1, _pats("231", "312")),
    TheoremId.PAIR3_213_231_EMPTY: (F1, _pats("213", "231")),
    TheoremId.PAIR3_123_132_TWO: (F1, _pats("123", "132")),
    TheoremId.D2_3142: (F2, _pats("3142")),
    TheoremId.CONJ_D2_4132: (F2, _pats("4132")),
    TheoremId.D1_1342_1423: (F1, _pats("1342", "1423")),
    TheoremId.D1_2341_2413: (F1, _pats("2341", "2413")),
    TheoremId.D1_1342_2413: (F1, _pats("1342", "2413")),
    TheoremId.D1_2341_1423: (F1, _pats("2341", "1423")),
    TheoremId.D1_231_4213: (F1, _pats("231", "4213")),
    TheoremId.D1_1342_4213: (F1, _pats("1342", "4213")),
    TheoremId.D1_2413_3142: (F1, _pats("2413", "3142")),
    TheoremId.D1_1423_4132: (F1, _pats("1423", "4132")),
}


def _in_family(kind: DumontKind, patterns: Iterable, q: Sequence[int]) -> bool:
    return is_member(kind, q) and avoids_all(q, patterns)


@lru_cache(maxsize=None)
def _members(kind: DumontKind, patterns: frozenset, n: int) -> frozenset:
    return frozenset(tuple(p) for p in generate(kind, n, patterns))


def _shift(values: Iterable[int], by: int) -> tuple[int, ...]:
    return tuple(v + by for v in values)


def _is_interval(values: Sequence[int], lo: int, hi: int) -> bool:
    """values is a rearrangement of lo..hi."""
    return sorted(values) == list(range(lo, hi + 1))


# --- small combinatorial objects -------------------------------------------


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for s in self.steps:
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise InvalidDyckPath(f"unknown step {s!r}")
            if height < 0:
                raise InvalidDyckPath(f"{self.steps!r} goes below the axis")
        if height:
            raise InvalidDyckPath(f"{self.steps!r} does not return to the axis")

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def first_return(self) -> tuple["DyckPath", "DyckPath"]:
        """Split a nonempty path as U A D B; returns (A, B)."""
        height = 0
        for i, s in enumerate(self.steps):
            height += 1 if s == "U" else -1
            if height == 0:
                return DyckPath(self.steps[1:i]), DyckPath(self.steps[i + 1 :])
        raise InvalidDyckPath("empty path has no first return")


def dyck_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths with 2n steps."""

    def rec(prefix: str, ups: int, downs: int):
        if ups == n and downs == n:
            yield prefix
            return
        if ups < n:
            yield from rec(prefix + "U", ups + 1, downs)
        if downs < ups:
            yield from rec(prefix + "D", ups, downs + 1)

    for s in rec("", 0, 0):
        yield DyckPath(s)


@dataclass(frozen=True)
class WeakComposition:
    """An ordered sequence of positive parts.

    The name is historical; parts are strictly positive, which
    is what the count binom(n-1, k-1) refers to.
    """

    parts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if any(p < 1 for p in self.parts) or sum(self.parts) != self.total or self.total < 1:
            raise InvalidComposition(f"{self.parts} is not a composition of {self.total}")

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))

    @classmethod
    def parse(cls, text: str) -> "WeakComposition":
        try:
            parts = tuple(int(t) for t in text.replace(",", "+").split("+") if t.strip())
        except ValueError:
            raise InvalidComposition(f"cannot parse composition {text!r}") from None
        return cls(parts, sum(parts))


def compositions(n: int) -> Iterator[WeakComposition]:
    for mask in range(1 << (n - 1)):
        parts, run = [], 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield WeakComposition(tuple(parts), n)


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        wide = any(v > 9 for c in self.cycles for v in c)
        sep = " " if wide else ""
        return "".join("(" + sep.join(map(str, c)) + ")" for c in self.cycles)

    def to_permutation(self) -> Permutation:
        size = sum(len(c) for c in self.cycles)
        image = [0] * (size + 1)
        for c in self.cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                image[a] = b
        return Permutation(image[1:])


def cycle_decomposition(p: Sequence[int]) -> CycleDecomposition:
    """Cycles of p, each starting at its largest element, ordered by their
    smallest element: 21835476 -> (21)(8643)(5)(7)."""
    seen = set()
    cycles = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = p[start - 1]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = p[v - 1]
        top = cyc.index(max(cyc))
        cycles.append(tuple(cyc[top:] + cyc[:top]))
    cycles.sort(key=min)
    return CycleDecomposition(tuple(cycles))


# --- second kind, 231-avoiding <-> compositions -----------------------------

_D2_231 = _pats("231")


def d2_231_to_composition(p: Sequence[int]) -> WeakComposition:
    """Map each non-fixed cycle (2l, 2l-2, ..., 2k, 2k-1) to the part l-k+1."""
    if len(p) == 0 or not _in_family(F2, _D2_231, p):
        raise NotInFamily(f"{format_permutation(p)} is not a 231-avoiding Dumont permutation of the second kind")
    parts = []
    for cyc in cycle_decomposition(p).cycles:
        if len(cyc) == 1:
            continue
        evens, odd = cyc[:-1], cyc[-1]
        top, low = evens[0], evens[-1]
        if (
            odd % 2 == 0
            or low != odd + 1
            or list(evens) != list(range(top, low - 1, -2))
        ):
            raise MalformedStructure(f"unexpected cycle {cyc} in {format_permutation(p)}")
        parts.append((top - low) // 2 + 1)
    return WeakComposition(tuple(parts), len(p) // 2)


def composition_to_d2_231(c: WeakComposition) -> Permutation:
    """Inverse of d2_231_to_composition: part t after prefix sum S becomes the
    cycle (2(S+t), 2(S+t)-2, ..., 2S+2, 2S+1); remaining odd values are fixed."""
    if not isinstance(c, WeakComposition):
        c = WeakComposition(tuple(c), sum(c))
    cycles = []
    s = 0
    for t in c.parts:
        cycles.append(tuple(range(2 * (s + t), 2 * s, -2)) + (2 * s + 1,))
        cycles.extend((v,) for v in range(2 * s + 3, 2 * (s + t), 2))
        s += t
    return CycleDecomposition(tuple(cycles)).to_permutation()


# --- second kind, 3142-avoiding <-> Dyck paths ------------------------------

_D2_3142 = _pats("3142")


def d2_3142_decompose(p: Sequence[int]) -> tuple[int, Permutation, Permutation]:
    """Split p = (2k, 1, rc(left) + 1, right + 2k); returns (k, left, right)."""
    if len(p) == 0 or not _in_family(F2, _D2_3142, p):
        raise NotInFamily(f"{format_permutation(p)} is not a 3142-avoiding Dumont permutation of the second kind")
    return _split_3142(p)


def _split_3142(p: Sequence[int]) -> tuple[int, Permutation, Permutation]:
    m = len(p)
    first = p[0]
    if first % 2 or p[1] != 1:
        raise MalformedStructure(f"{format_permutation(p)} does not start with (2k, 1)")
    k = first // 2
    middle = p[2 : 2 * k]
    tail = p[2 * k :]
    if not _is_interval(middle, 2, 2 * k - 1) or not _is_interval(tail, 2 * k + 1, m):
        raise MalformedStructure(f"segments of {format_permutation(p)} are not value intervals")
    left = reverse_complement(_shift(middle, -1))
    right = Permutation._trusted(_shift(tail, -2 * k))
    return k, left, right


def _join_3142(k: int, left: Sequence[int], right: Sequence[int]) -> Permutation:
    return Permutation._trusted((2 * k, 1) + _shift(reverse_complement(left), 1) + _shift(right, 2 * k))


def d2_3142_to_dyck(p: Sequence[int]) -> DyckPath:
    """U (image of left) D (image of right), recursively."""
    if len(p) and not _in_family(F2, _D2_3142, p):
        raise NotInFamily(f"{format_permutation(p)} is not a 3142-avoiding Dumont permutation of the second kind")

    def phi(q) -> str:
        if not q:
            return ""
        _, left, right = _split_3142(q)
        return "U" + phi(left) + "D" + phi(right)

    return DyckPath(phi(tuple(p)))


def dyck_to_d2_3142(d) -> Permutation:
    if not isinstance(d, DyckPath):
        d = DyckPath(str(d))

    def psi(path: DyckPath) -> Permutation:
        if not path.steps:
            return Permutation._trusted(())
        inner, rest = path.first_return()
        k = len(inner) // 2 + 1
        return _join_3142(k, psi(inner), psi(rest))

    return psi(d)


# --- explicit avoider sets --------------------------------------------------


def _alternating(n: int) -> tuple[int, ...]:
    # (2, 1, 4, 3, ..., 2n, 2n-1)
    return tuple(v for i in range(1, n + 1) for v in (2 * i, 2 * i - 1))


def _rising_pairs(hi: int, lo: int) -> tuple[int, ...]:
    # (2hi-1, 2hi, 2hi-3, 2hi-2, ..., 2lo-1, 2lo)
    return tuple(v for i in range(hi, lo - 1, -1) for v in (2 * i - 1, 2 * i))


def _pair3_132_312(n: int) -> tuple[int, ...]:
    # read from the right: (2,1), (2n-1,2n), (4,3), (2n-3,2n-2), ...
    blocks = []
    low, high = 1, n
    for i in range(n):
        if i % 2 == 0:
            blocks.append((2 * low, 2 * low - 1))
            low += 1
        else:
            blocks.append((2 * high - 1, 2 * high))
            high -= 1
    return tuple(v for b in reversed(blocks) for v in b)


_D1_123_BASE = {
    1: [(2, 1)],
    2: [(2, 1, 4, 3), (3, 4, 2, 1), (4, 2, 1, 3)],
    3: [(4, 3, 6, 2, 1, 5), (5, 6, 2, 1, 4, 3), (5, 6, 3, 4, 2, 1), (5, 6, 4, 2, 1, 3)],
}


def _canonical(tag: TheoremId, n: int) -> list[tuple[int, ...]]:
    T = TheoremId
    if n == 0:
        return [()]
    if tag in (T.D1_321, T.D2_312, T.PAIR3_D2_231_321, T.PAIR3_231_312, T.D1_231_4213):
        return [_alternating(n)]
    if tag is T.PAIR3_132_231:
        return [tuple(range(2 * n, 0, -2)) + tuple(range(1, 2 * n, 2))]
    if tag is T.PAIR3_132_312:
        return [_pair3_132_312(n)]
    if tag is T.PAIR3_213_312:
        return [tuple(range(3, 2 * n, 2)) + tuple(range(2 * n, 0, -2)) + (1,)]
    if tag in (T.PAIR3_123_213, T.PAIR3_132_213):
        return [_rising_pairs(n, 2) + (2, 1)]
    if tag is T.PAIR3_123_132_TWO:
        if n == 1:
            return [(2, 1)]
        head = _rising_pairs(n, 3)
        return [head + (3, 4, 2, 1), head + (4, 2, 1, 3)]
    if tag is T.PAIR3_213_231_EMPTY:
        return [(2, 1)] if n == 1 else []
    if tag is T.D1_123:
        if n in _D1_123_BASE:
            return list(_D1_123_BASE[n])
        return [_rising_pairs(n, 4) + base for base in _D1_123_BASE[3]]
    raise UnknownFamily(f"{tag.name} has no explicit construction")


CANONICAL_TAGS = frozenset(
    {
        TheoremId.D1_321,
        TheoremId.D2_312,
        TheoremId.D1_123,
        TheoremId.PAIR3_132_231,
        TheoremId.PAIR3_132_312,
        TheoremId.PAIR3_213_312,
        TheoremId.PAIR3_123_213,
        TheoremId.PAIR3_132_213,
        TheoremId.PAIR3_D2_231_321,
        TheoremId.PAIR3_231_312,
        TheoremId.PAIR3_213_231_EMPTY,
        TheoremId.PAIR3_123_132_TWO,
        TheoremId.D1_231_4213,
    }
)


def canonical_avoider(family, n: int) -> list[Permutation]:
    """The explicit avoider set a theorem prescribes, built without search,
    sorted lexicographically."""
    tag = TheoremId.parse(family)
    if tag not in CANONICAL_TAGS:
        raise UnknownFamily(f"{tag.name} has no explicit construction")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sorted(Permutation(p) for p in _canonical(tag, n))


# --- recursive shape templates ----------------------------------------------


def _fam(tag: TheoremId, q: Sequence[int]) -> bool:
    kind, pats = FAMILIES[tag]
    return _in_family(kind, pats, q)


def _like_fam(tag: TheoremId, q: Sequence[int]) -> bool:
    # Dumont-like image of the family: complement lands back in it
    return _fam(tag, complement(q))


def _std(block: Sequence[int]) -> tuple[int, ...]:
    lo = min(block)
    return _shift(block, 1 - lo)


def _shape_d1_213(p, n) -> bool:
    if n == 1:
        return tuple(p) == (2, 1)
    f231 = TheoremId.MANSOUR_CATALAN_231
    first = p[0]
    if first % 2 == 0 or not 3 <= first <= 2 * n - 1:
        return False
    k = (first - 1) // 2
    l1 = 2 * n - 2 * k - 2
    seg1 = p[1 : 1 + l1]
    if p[1 + l1] != 2 * k + 2 or tuple(p[-2:]) != (2, 1):
        return False
    seg2 = p[2 + l1 : 2 * n - 2]
    if not _is_interval(seg1, 2 * k + 3, 2 * n) or not _is_interval(seg2, 3, 2 * k):
        return False
    return _fam(f231, complement(_shift(seg1, -(2 * k + 2)))) and _fam(f231, complement(_shift(seg2, -2)))


def _split_at(p, value) -> int:
    return list(p).index(value)


def _shape_schroeder(tag: TheoremId, p, n: int, a: tuple, b: tuple) -> bool:
    """Shared parser for the three little-Schroeder pair theorems.

    Type A is (X, 2n-1, 2n, Y) and type B is (X, 2n, Y, 2n-1). Each of ``a``
    and ``b`` is (high_first, k_min, k_max): high_first says X sits above Y,
    and k is half the length of the low block.
    """
    m = 2 * n
    i = _split_at(p, m - 1)
    if i + 1 < m and p[i + 1] == m:
        x, y = p[:i], p[i + 2 :]
        high_first, k_lo, k_hi = a
    elif p[-1] == m - 1:
        j = _split_at(p, m)
        x, y = p[:j], p[j + 1 : -1]
        high_first, k_lo, k_hi = b
    else:
        return False
    if len(x) % 2 or len(y) % 2:
        return False
    low, high = (y, x) if high_first else (x, y)
    k = len(low) // 2
    if not k_lo <= k <= k_hi:
        return False
    if not _is_interval(low, 1, 2 * k) or not _is_interval(high, 2 * k + 1, m - 2):
        return False
    return _fam(tag, low) and _fam(tag, _shift(high, -2 * k))


def _shape_d1_2341_1423(p, n) -> bool:
    tag = TheoremId.D1_2341_1423
    if n < 3:
        return _fam(tag, p)
    m = 2 * n
    p = tuple(p)
    if p[:2] == (m - 1, m) and _fam(tag, _shift(p[2:], 0)):
        return True
    if p[-4:] == (m - 1, m, m - 2, m - 3) and _fam(tag, p[:-4]):
        return True
    if p[0] == m and p[-1] == m - 1 and _fam(tag, p[1:-1]):
        return True
    if p[-2:] == (m, m - 1) and _fam(tag, p[:-2]):
        return True
    if p[:3] == (m - 2, m - 3, m) and p[-1] == m - 1 and _fam(tag, p[3:-1]):
        return True
    return False


def _shape_d1_1342_4213(p, n) -> bool:
    tag = TheoremId.D1_1342_4213
    m = 2 * n
    p = tuple(p)
    if p[-2:] == (2, 1):
        head = p[:-2]
        if _is_interval(head, 3, m) and _fam(tag, complement(_shift(head, -2))):
            return True
    if p[-2:] == (m, m - 1) and _fam(tag, p[:-2]):
        return True
    return False


def _blocks_2413_3142(p) -> Optional[tuple[int, list, list]]:
    """Parse p = (..., b4, b3, b2, 2k, b1, 2k-1).

    Odd-indexed blocks hold values below 2k-1 and decrease leftwards; even
    blocks hold values above 2k and increase leftwards. b1 and b2 may be
    empty, every later block is nonempty. Returns (k, odd blocks, even blocks)
    or None if p is not of this form.
    """
    d = p[-1]
    if d % 2 == 0:
        return None
    k = (d + 1) // 2
    j = _split_at(p, 2 * k) if 2 * k <= len(p) else -1
    if j < 0:
        return None
    b1 = list(p[j + 1 : -1])
    if any(v >= d for v in b1):
        return None
    runs: list[list[int]] = []
    for v in p[:j]:
        high = v > d
        if runs and (runs[-1][0] > d) == high:
            runs[-1].append(v)
        else:
            runs.append([v])
    runs.reverse()  # runs[0] is adjacent to 2k
    odd, even = [b1], []
    if runs and runs[0][0] > d:
        even.append(runs.pop(0))
    else:
        even.append([])
    for i, run in enumerate(runs):
        (odd if i % 2 == 0 else even).append(run)
    return k, odd, even


def _shape_d1_2413_3142(p, n) -> bool:
    tag = TheoremId.D1_2413_3142
    parsed = _blocks_2413_3142(tuple(p))
    if parsed is None:
        return False
    k, odd, even = parsed
    # low blocks tile 1..2k-2 from the left end down, high blocks 2k+1..2n upwards
    top = 2 * k - 2
    for b in odd:
        if b:
            if not _is_interval(b, top - len(b) + 1, top) or not _fam(tag, _std(b)):
                return False
            top -= len(b)
    if top != 0:
        return False
    bottom = 2 * k + 1
    for b in even:
        if b:
            if not _is_interval(b, bottom, bottom + len(b) - 1) or not _like_fam(tag, _std(b)):
                return False
            bottom += len(b)
    return bottom == 2 * n + 1


def _shape_d2_3142(p, n) -> bool:
    tag = TheoremId.D2_3142
    try:
        _, left, right = _split_3142(tuple(p))
    except MalformedStructure:
        return False
    return _fam(tag, left) and _fam(tag, right)


STRUCTURAL_TAGS = (
    TheoremId.D1_213,
    TheoremId.D1_1342_1423,
    TheoremId.D1_2341_2413,
    TheoremId.D1_1342_2413,
    TheoremId.D1_2341_1423,
    TheoremId.D1_1342_4213,
    TheoremId.D1_2413_3142,
    TheoremId.D2_3142,
)


def matches_shape(theorem, p: Sequence[int]) -> bool:
    """Does p have the top-level form the theorem's structure result claims?"""
    tag = TheoremId.parse(theorem)
    if tag not in STRUCTURAL_TAGS:
        raise UnknownShape(f"{tag.name} has no structural template")
    p = tuple(p)
    if len(p) % 2:
        return False
    n = len(p) // 2
    if n == 0:
        return True
    if tag is TheoremId.D1_213:
        return _shape_d1_213(p, n)
    if tag in _SCHROEDER_CASES:
        return _shape_schroeder(tag, p, n, *_SCHROEDER_CASES[tag](n))
    if tag is TheoremId.D1_2341_1423:
        return _shape_d1_2341_1423(p, n)
    if tag is TheoremId.D1_1342_4213:
        return _shape_d1_1342_4213(p, n)
    if tag is TheoremId.D1_2413_3142:
        return _shape_d1_2413_3142(p, n)
    return _shape_d2_3142(p, n)


# (high_first, k_min, k_max) for the (2n-1, 2n) case and the (2n, ..., 2n-1) case
_SCHROEDER_CASES = {
    TheoremId.D1_1342_1423: lambda n: ((True, 1, n - 1), (True, 0, n - 1)),
    TheoremId.D1_2341_2413: lambda n: ((False, 0, n - 2), (False, 0, n - 1)),
    TheoremId.D1_1342_2413: lambda n: ((True, 1, n - 1), (False, 0, n - 1)),
}


# --- template instantiation (the converse direction) ------------------------


def _fam_members(tag: TheoremId, n: int) -> frozenset:
    kind, pats = FAMILIES[tag]
    return _members(kind, pats, n)


def _instances_d1_213(n):
    if n == 1:
        yield (2, 1)
        return
    f231 = TheoremId.MANSOUR_CATALAN_231
    for k in range(1, n):
        for r1 in _fam_members(f231, n - k - 1):
            for r2 in _fam_members(f231, k - 1):
                yield (
                    (2 * k + 1,)
                    + _shift(complement(r1), 2 * k + 2)
                    + (2 * k + 2,)
                    + _shift(complement(r2), 2)
                    + (2, 1)
                )


def _instances_schroeder(tag, n):
    m = 2 * n
    for kind_a, (high_first, k_lo, k_hi) in zip((True, False), _SCHROEDER_CASES[tag](n)):
        for k in range(k_lo, k_hi + 1):
            lows = list(_fam_members(tag, k))
            highs = [_shift(q, 2 * k) for q in _fam_members(tag, n - k - 1)]
            for low, high in product(lows, highs):
                x, y = (high, low) if high_first else (low, high)
                yield x + (m - 1, m) + y if kind_a else x + (m,) + y + (m - 1,)


def _instances_d1_2341_1423(n):
    tag = TheoremId.D1_2341_1423
    if n < 3:
        yield from _fam_members(tag, n)
        return
    m = 2 * n
    for q in _fam_members(tag, n - 1):
        yield (m - 1, m) + q
        yield (m,) + q + (m - 1,)
        yield q + (m, m - 1)
    for q in _fam_members(tag, n - 2):
        yield q + (m - 1, m, m - 2, m - 3)
        yield (m - 2, m - 3, m) + q + (m - 1,)


def _instances_d1_1342_4213(n):
    tag = TheoremId.D1_1342_4213
    m = 2 * n
    if n == 1:
        # both cases collapse to 21
        yield (2, 1)
        return
    for q in _fam_members(tag, n - 1):
        yield _shift(complement(q), 2) + (2, 1)
        yield q + (m, m - 1)


def _even_splits(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered sequences of positive even sizes summing to total."""
    if total == 0:
        yield ()
        return
    for s in range(2, total + 1, 2):
        for rest in _even_splits(total - s):
            yield (s,) + rest


def _instances_d1_2413_3142(n):
    tag = TheoremId.D1_2413_3142
    m = 2 * n
    for k in range(1, n + 1):
        low_total, high_total = 2 * k - 2, m - 2 * k
        # block sizes read from 2k outwards: b1 (low, maybe 0), b2 (high, maybe 0), b3 (low), b4 (high), ...
        for b1 in range(0, low_total + 1, 2):
            for b2 in range(0, high_total + 1, 2):
                for lows in _even_splits(low_total - b1):
                    for highs in _even_splits(high_total - b2):
                        # blocks beyond b2 alternate low, high, low, ...
                        if not (len(lows) == len(highs) or len(lows) == len(highs) + 1):
                            continue
                        yield from _assemble_2413_3142(tag, k, n, [b1] + list(lows), [b2] + list(highs))


def _assemble_2413_3142(tag, k, n, low_sizes, high_sizes):
    # odd blocks: values from 2k-2 downwards; even blocks: from 2k+1 upwards
    top = 2 * k - 2
    odd_blocks = []
    for s in low_sizes:
        if s:
            lo = top - s + 1
            odd_blocks.append([_shift(q, lo - 1) for q in _fam_members(tag, s // 2)])
            top -= s
        else:
            odd_blocks.append([()])
    bottom = 2 * k + 1
    even_blocks = []
    for s in high_sizes:
        if s:
            even_blocks.append([_shift(complement(q), bottom - 1) for q in _fam_members(tag, s // 2)])
            bottom += s
        else:
            even_blocks.append([()])
    # order from 2k leftwards: b2, b3, b4, ... ; b1 sits between 2k and 2k-1
    choices = []
    for i in range(1, len(low_sizes) + len(high_sizes)):
        idx = i + 1  # block index b_idx
        choices.append(odd_blocks[idx // 2] if idx % 2 else even_blocks[idx // 2 - 1])
    for b1 in odd_blocks[0]:
        for picked in product(*choices):
            left = tuple(v for block in reversed(picked) for v in block)
            yield left + (2 * k,) + b1 + (2 * k - 1,)


def _instances_d2_3142(n):
    tag = TheoremId.D2_3142
    for k in range(1, n + 1):
        for left in _fam_members(tag, k - 1):
            for right in _fam_members(tag, n - k):
                yield tuple(_join_3142(k, left, right))


def template_instances(theorem, n: int) -> list[Permutation]:
    """All permutations the structure template builds at size n, sorted.

    Duplicates are removed; a template that produced the same permutation
    twice would show up as a count mismatch in the verification instead.
    """
    tag = TheoremId.parse(theorem)
    if tag not in STRUCTURAL_TAGS:
        raise UnknownShape(f"{tag.name} has no structural template")
    if n == 0:
        return [Permutation._trusted(())]
    T = TheoremId
    if tag is T.D1_213:
        it = _instances_d1_213(n)
    elif tag is T.D1_1342_1423:
        it = _instances_schroeder(tag, n)
    elif tag is T.D1_2341_2413:
        it = _instances_schroeder(tag, n)
    elif tag is T.D1_1342_2413:
        it = _instances_schroeder(tag, n)
    elif tag is T.D1_2341_1423:
        it = _instances_d1_2341_1423(n)
    elif tag is T.D1_1342_4213:
        it = _instances_d1_1342_4213(n)
    elif tag is T.D1_2413_3142:
        it = _instances_d1_2413_3142(n)
    else:
        it = _instances_d2_3142(n)
    return sorted(Permutation._trusted(p) for p in set(it))


def template_multiplicity(theorem, n: int) -> int:
    """Number of template instantiations counted with multiplicity."""
    tag = TheoremId.parse(theorem)
    T = TheoremId
    gens = {
        T.D1_213: lambda: _instances_d1_213(n),
        T.D1_1342_1423: lambda: _instances_schroeder(tag, n),
        T.D1_2341_2413: lambda: _instances_schroeder(tag, n),
        T.D1_1342_2413: lambda: _instances_schroeder(tag, n),
        T.D1_2341_1423: lambda: _instances_d1_2341_1423(n),
        T.D1_1342_4213: lambda: _instances_d1_1342_4213(n),
        T.D1_2413_3142: lambda: _instances_d1_2413_3142(n),
        T.D2_3142: lambda: _instances_d2_3142(n),
    }
    if n == 0:
        return 1
    return sum(1 for _ in gens[tag]())
