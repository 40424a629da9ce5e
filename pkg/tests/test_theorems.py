import json

import pytest

from dumont.errors import LimitExceeded, UnknownTheorem
from dumont.theorems import CONJECTURES, TheoremId, registry, verify_theorem

# results the exhaustive data contradicts; their reports are expected to fail
REFUTED = {
    TheoremId.D1_1342_2413,
    TheoremId.D1_2413_4132_EQ_1423_3142,
    TheoremId.TABLE_4_1,
}


def test_every_tag_registered():
    assert set(registry()) == set(TheoremId)


def test_d2_231_example():
    report = verify_theorem(TheoremId.D2_231, 4)
    assert report.overall
    assert [r.observed for r in report.rows] == [1, 2, 4, 8]


def test_d1_123_example():
    report = verify_theorem("d1-123", 4)
    assert report.overall
    assert [len(r.observed) for r in report.rows] == [1, 3, 4, 4]


def test_table_rows():
    report = verify_theorem(TheoremId.TABLE_4_1, 5)
    got = [r.observed for r in report.rows]
    assert [g[1] for g in got] == [1, 1, 2, 7, 36, 239]
    assert [g[2] for g in got] == [1, 1, 2, 6, 25, 135]
    assert [r.expected[0] for r in report.rows] == [1, 1, 2, 7, 36, 241]
    # the exhaustive count for 3421 at n = 5 is 239, one of the refuted entries
    assert [r.passed for r in report.rows] == [True] * 5 + [False]


def test_conjecture_flag():
    report = verify_theorem(TheoremId.CONJ_D2_4132, 6)
    assert report.overall and report.conjecture
    assert json.loads(report.to_json())["conjecture"] is True
    assert CONJECTURES == {TheoremId.CONJ_D2_4132}


def test_json_shape():
    data = json.loads(verify_theorem(TheoremId.PAIR3_132_231, 3).to_json())
    assert set(data) == {"theorem", "rows", "overall"}
    assert data["rows"][-1] == {"n": 3, "observed": ["642135"], "expected": ["642135"], "pass": True}


@pytest.mark.parametrize("tag", [t for t in TheoremId if t not in REFUTED], ids=lambda t: t.value)
def test_reports_pass(tag):
    assert verify_theorem(tag, 5).overall


@pytest.mark.parametrize("tag", sorted(REFUTED, key=lambda t: t.value), ids=lambda t: t.value)
def test_refuted_reports_fail(tag):
    assert not verify_theorem(tag, 5).overall


def test_overall_is_conjunction():
    report = verify_theorem(TheoremId.D1_1342_2413, 5)
    assert report.overall == all(r.passed for r in report.rows)
    assert [r.n for r in report.rows] == list(range(0, 6))


def test_parallel_rows_identical():
    a = verify_theorem(TheoremId.D1_2413_3142, 5)
    b = verify_theorem(TheoremId.D1_2413_3142, 5, workers=3)
    assert a.to_dict() == b.to_dict()


def test_errors():
    with pytest.raises(UnknownTheorem):
        verify_theorem("theorem-99", 3)
    with pytest.raises(LimitExceeded):
        verify_theorem(TheoremId.D2_231, 20)
