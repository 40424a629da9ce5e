from fractions import Fraction

import pytest

from dumont.errors import DomainError, UnknownSeries
from dumont.families import DumontKind, count_avoiders
from dumont.sequences import (
    ballot,
    catalan,
    closed_form_2341_1423,
    gen_catalan2,
    gen_catalan2_ballot,
    gf_coefficients,
    gf_series,
    little_schroeder,
    rec_2341_1423,
    sequence_terms,
    verify_lemma_4213_1342,
)
from dumont.series import PowerSeries


def ints(xs):
    assert all(Fraction(x).denominator == 1 for x in xs)
    return [int(x) for x in xs]


def test_catalan():
    assert [catalan(n) for n in (0, 3, 5)] == [1, 5, 42]


def test_little_schroeder():
    assert [little_schroeder(n) for n in range(1, 9)] == [1, 1, 3, 11, 45, 197, 903, 4279]
    with pytest.raises(DomainError):
        little_schroeder(0)


@pytest.mark.parametrize("n", range(2, 13))
def test_little_schroeder_recurrence(n):
    # s_{n+1} = -s_n + 2 sum_{k=1}^{n} s_k s_{n+1-k}
    s = little_schroeder
    assert s(n + 1) == -s(n) + 2 * sum(s(k) * s(n + 1 - k) for k in range(1, n + 1))


def test_ballot():
    assert ballot(1, 0) == 1
    assert ballot(3, 2) == 2
    assert ballot(2, 1) == 1
    with pytest.raises(DomainError):
        ballot(3, 3)


def test_gen_catalan2():
    assert [gen_catalan2(n) for n in range(5)] == [1, 1, 3, 13, 67]
    for n in range(1, 21):
        assert gen_catalan2(n) == gen_catalan2_ballot(n)


def test_rec_and_closed_form():
    assert [rec_2341_1423(n) for n in range(6)] == [1, 1, 3, 11, 39, 139]
    assert closed_form_2341_1423(1) == 1
    assert closed_form_2341_1423(3) == 11
    assert closed_form_2341_1423(5) == 139
    for n in range(1, 21):
        assert closed_form_2341_1423(n) == rec_2341_1423(n)
    with pytest.raises(DomainError):
        closed_form_2341_1423(21)


def test_gf_examples():
    assert ints(gf_coefficients("C", 5)) == [1, 1, 2, 5, 14]
    assert ints(gf_coefficients("F", 4)) == [1, 1, 3, 13]
    assert ints(gf_coefficients("s", 5)) == [0, 1, 1, 3, 11]
    assert ints(gf_coefficients("G", 7)) == [1, 1, 3, 12, 52, 232, 1049]
    assert ints(gf_coefficients("H", 7)) == [1, 1, 3, 12, 54, 259, 1294]
    assert gf_coefficients("gf-f", 3) == gf_coefficients("F", 3)
    with pytest.raises(UnknownSeries):
        gf_coefficients("Q", 3)


@pytest.mark.parametrize("order", range(1, 13))
def test_catalan_square_relation(order):
    c = gf_series("C", order)
    x = PowerSeries.x(order)
    assert c == 1 + x * c * c


@pytest.mark.parametrize("order", range(1, 13))
def test_f_quadratic(order):
    f = gf_series("F", order)
    x = PowerSeries.x(order)
    assert (x + 1) * f * f - 3 * f + 2 == PowerSeries([], order)


def test_f_matches_gen_catalan2():
    assert ints(gf_coefficients("F", 12)) == [gen_catalan2(n) for n in range(12)]


def test_s_matches_recurrence():
    assert ints(gf_coefficients("s", 12))[1:] == [little_schroeder(n) for n in range(1, 12)]


def test_sequence_terms():
    assert sequence_terms("genocchi", 6) == [1, 1, 3, 17, 155, 2073]
    assert sequence_terms("catalan", 4) == [1, 1, 2, 5]
    assert sequence_terms("little-schroeder", 4) == [1, 1, 3, 11]
    with pytest.raises(UnknownSeries):
        sequence_terms("fibonacci", 3)


def test_lemma():
    assert verify_lemma_4213_1342(1)
    assert verify_lemma_4213_1342(6)
    a = [count_avoiders(DumontKind.FIRST, "4213", n) for n in range(5)]
    assert a == [1, 1, 2, 6, 25]
