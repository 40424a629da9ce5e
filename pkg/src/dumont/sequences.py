"""Reference integer sequences and the generating functions they come from.

Every value is exact. The only floating-point-like computation is the
nearest-integer closed form for the 3a+2a recurrence, which runs in
high-precision decimal arithmetic and refuses to answer when the rounding
decision is too close to call.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import DomainError, PrecisionExhausted, UnknownSeries
from .series import PowerSeries, coefficients_equal

__all__ = [
    "SequenceId",
    "catalan",
    "little_schroeder",
    "ballot",
    "gen_catalan2",
    "gen_catalan2_ballot",
    "rec_2341_1423",
    "closed_form_2341_1423",
    "gf_series",
    "gf_coefficients",
    "sequence_terms",
    "verify_lemma_4213_1342",
    "lemma_4213_1342_rows",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 12
DECISION_MARGIN = Decimal("1e-6")


class SequenceId(Enum):
    CATALAN = "catalan"
    LITTLE_SCHROEDER = "little-schroeder"
    POWERS_OF_TWO = "powers-of-two"
    REC_2341_1423 = "rec-2341-1423"
    GEN_CATALAN2 = "gen-catalan2"
    BALLOT = "ballot"
    GENOCCHI = "genocchi"


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError("catalan(n) needs n >= 0")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _schroeder_table(n: int) -> tuple[int, ...]:
    # s[0] is unused; s_1 = s_2 = 1 and
    # s_{j+1} = -s_j + 2 * sum_{k=1}^{j} s_k s_{j+1-k}
    s = [0, 1, 1]
    while len(s) <= n:
        j = len(s) - 1
        s.append(-s[j] + 2 * sum(s[k] * s[j + 1 - k] for k in range(1, j + 1)))
    return tuple(s)


def little_schroeder(n: int) -> int:
    """Little Schroeder number s_n (1, 1, 3, 11, 45, ...), n >= 1."""
    if n < 1:
        raise DomainError("little_schroeder(n) needs n >= 1")
    return _schroeder_table(n)[n]


def ballot(n: int, k: int) -> int:
    """(n - k) / (n + k) * binom(n + k, n), for 0 <= k <= n - 1."""
    if n < 1 or not 0 <= k <= n - 1:
        raise DomainError(f"ballot({n}, {k}) needs 0 <= k <= n - 1")
    value = Fraction(n - k, n + k) * comb(n + k, n)
    assert value.denominator == 1
    return int(value)


def gen_catalan2(n: int) -> int:
    """C(2; n) via (-1)^n + sum_{k=1}^n (-1)^(n-k) 2^k C_{k-1}."""
    if n < 0:
        raise DomainError("n must be >= 0")
    return (-1) ** n + sum((-1) ** (n - k) * 2**k * catalan(k - 1) for k in range(1, n + 1))


def gen_catalan2_ballot(n: int) -> int:
    """Same sequence as the convolution of ballot numbers with powers of 2."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return 1
    return sum(ballot(n, k) * 2**k for k in range(n))


def rec_2341_1423(n: int) -> int:
    """a_0 = a_1 = 1, a_2 = 3, a_n = 3 a_{n-1} + 2 a_{n-2} for n >= 3."""
    if n < 0:
        raise DomainError("n must be >= 0")
    a = [1, 1, 3]
    while len(a) <= n:
        a.append(3 * a[-1] + 2 * a[-2])
    return a[n]


def closed_form_2341_1423(n: int) -> int:
    """Nearest integer to ((3 + sqrt 17) / 2)^n / sqrt 17, for 1 <= n <= 20."""
    if not 1 <= n <= 20:
        raise DomainError("closed form is evaluated for 1 <= n <= 20")
    with localcontext() as ctx:
        ctx.prec = 60
        root = Decimal(17).sqrt()
        value = ((3 + root) / 2) ** n / root
        nearest = value.to_integral_value()
        if Decimal("0.5") - abs(value - nearest) < DECISION_MARGIN:
            raise PrecisionExhausted(f"rounding of {value} is ambiguous at margin {DECISION_MARGIN}")
    return int(nearest)


# --- generating functions ---------------------------------------------------


def _catalan_series(order: int) -> PowerSeries:
    # C_{k+1} = sum_{i} C_i C_{k-i}, independent of the closed form below
    c = [1]
    while len(c) < order:
        k = len(c) - 1
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    series = PowerSeries(c, order)
    x = PowerSeries.x(order + 1)
    closed = ((1 - (1 - 4 * x).sqrt()).div_x() / 2).truncate(order)
    coefficients_equal(series, closed, "C(x) recurrence vs (1 - sqrt(1-4x))/(2x)")
    return series


def _f_series(order: int) -> PowerSeries:
    x = PowerSeries.x(order)
    c2 = _catalan_series(order).scale(2)
    by_root = (3 - (1 - 8 * x).sqrt()) / (2 * (1 + x))
    by_catalan = (1 - x * c2).invert()
    by_shift = (1 + 2 * x * c2) / (1 + x)
    coefficients_equal(by_root, by_catalan, "F: (3 - sqrt(1-8x))/(2(1+x)) vs 1/(1 - x C(2x))")
    coefficients_equal(by_root, by_shift, "F: (3 - sqrt(1-8x))/(2(1+x)) vs (1 + 2x C(2x))/(1+x)")
    return by_root


def _g_series(order: int) -> PowerSeries:
    x = PowerSeries.x(order)
    c = _catalan_series(order)
    by_catalan = (2 - (1 + x) * c) / (2 - x - (1 + x) * c)
    # Clearing 2x from the Catalan form gives
    # (1 - 3x - (1+x) sqrt(1-4x)) / (1 - 3x + 2x^2 - (1+x) sqrt(1-4x)),
    # which is 0/0 at x = 0; cancel one factor of x first.
    x1 = PowerSeries.x(order + 1)
    root = (1 - 4 * x1).sqrt()
    num = (1 - 3 * x1 - (1 + x1) * root).div_x()
    den = (1 - 3 * x1 + 2 * x1 * x1 - (1 + x1) * root).div_x()
    by_root = num / den
    coefficients_equal(by_catalan, by_root, "G: Catalan form vs radical form")
    return by_catalan


def _h_series(order: int) -> PowerSeries:
    x = PowerSeries.x(order + 1)
    c = _catalan_series(order + 1)
    num = 1 + x * c - (1 - x * c - 5 * x).sqrt()
    return num.div_x() / (2 * (1 + c.truncate(order)))


def _s_series(order: int) -> PowerSeries:
    x = PowerSeries.x(order)
    s = (1 + x - (1 - 6 * x + x * x).sqrt()) / 4
    expected = [0] + [little_schroeder(k) for k in range(1, order)]
    coefficients_equal(s, expected, "s(x) vs little Schroeder recurrence")
    return s


_GF: dict[str, Callable[[int], PowerSeries]] = {
    "C": _catalan_series,
    "F": _f_series,
    "G": _g_series,
    "H": _h_series,
    "s": _s_series,
}


def gf_series(name: str, order: int = DEFAULT_ORDER) -> PowerSeries:
    """One of the generating functions C, F, G, H, s as a truncated series."""
    key = name.removeprefix("gf-")
    if key not in _GF:
        key = {k.lower(): k for k in _GF}.get(key.lower(), key)
    if key not in _GF:
        raise UnknownSeries(f"unknown generating function {name!r}; expected one of {sorted(_GF)}")
    if order < 1:
        raise ValueError("order must be positive")
    return _GF[key](order)


def gf_coefficients(name: str, order: int = DEFAULT_ORDER) -> list[Fraction]:
    """First ``order`` Taylor coefficients of the named generating function."""
    return list(gf_series(name, order).coefficients)


# --- named sequences for the CLI -------------------------------------------


def sequence_terms(name: str, terms: int) -> list:
    """First ``terms`` values of a named sequence or ``gf-*`` series."""
    from .families import genocchi

    if terms < 1:
        raise ValueError("terms must be >= 1")
    key = name.strip().lower()
    if key.startswith("gf-"):
        return gf_coefficients(name.strip()[3:], terms)
    table: dict[str, Callable[[int], int]] = {
        "catalan": catalan,
        "little-schroeder": lambda i: little_schroeder(i + 1),
        "powers-of-two": lambda i: 2**i,
        "rec-2341-1423": rec_2341_1423,
        "gen-catalan2": gen_catalan2,
        "genocchi": lambda i: genocchi(i + 1),
    }
    if key not in table:
        raise UnknownSeries(f"unknown sequence {name!r}")
    return [table[key](i) for i in range(terms)]


def verify_lemma_4213_1342(n_max: int) -> bool:
    """Check a_n = sum_{k<n} b_k a_{n-1-k} where a counts first-kind Dumont
    permutations avoiding 4213 and b those avoiding 1342."""
    return all(row[3] for row in lemma_4213_1342_rows(n_max))


def lemma_4213_1342_rows(n_max: int) -> list[tuple[int, int, int, bool]]:
    from .families import DumontKind, count_avoiders

    a = [count_avoiders(DumontKind.FIRST, [(4, 2, 1, 3)], n) for n in range(n_max + 1)]
    b = [count_avoiders(DumontKind.FIRST, [(1, 3, 4, 2)], n) for n in range(n_max)]
    rows = []
    for n in range(1, n_max + 1):
        conv = sum(b[k] * a[n - 1 - k] for k in range(n))
        rows.append((n, a[n], conv, a[n] == conv))
    return rows
