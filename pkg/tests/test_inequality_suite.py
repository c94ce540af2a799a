import json

import pytest

from pfg.inequality_suite import (
    ALL_CHECKS,
    LemmaReport,
    block_decomposition,
    check_block_shift,
    check_block_shift_tail,
    check_dimension_ratio,
    check_hook_family,
    check_ratio_product,
    check_rectangle_arm,
    check_rectangle_last_row,
    check_rectangular_families,
    check_tail_and_ratio,
    check_two_row,
    check_weighted_shift,
    check_zero_set_link,
    run_all,
)
from pfg.partitions import dimension
from pfg.spectra import eta0_kuwong


def a0(lam):
    return abs(eta0_kuwong(lam))


def test_hook_chain_examples():
    # n = 5, p = 1 is tight; p = 2 is strict
    assert dimension((4, 1)) * a0((4, 1)) == dimension((5,)) * a0((5,))
    assert dimension((3, 1, 1)) * a0((3, 1, 1)) < dimension((4, 1)) * a0((4, 1))
    # n = 3, p = 2 is tight since n - p = 1
    assert dimension((1, 1, 1)) * a0((1, 1, 1)) == dimension((2, 1)) * a0((2, 1))
    report = check_hook_family(8)
    assert (5, 1) in report.equality_cases and (3, 2) in report.equality_cases
    assert (5, 2) not in report.equality_cases
    assert report.ok


def test_two_row_examples():
    assert (2 - 2 + 1) * a0((2, 2)) == a0((3, 1))
    assert (3 - 2 + 1) * a0((3, 2)) < a0((4, 1))
    report = check_two_row(10)
    assert {(2, 2), (4, 1)} <= set(report.equality_cases)
    assert (3, 2) not in report.equality_cases
    assert report.ok


def test_rectangle_examples():
    # q = 1, m = 2, k = t is tight
    for t in range(1, 5):
        assert (2 - 1 + t + 1) * a0((1,) * (t + 1)) == t * a0((3,) + (1,) * t)
    report = check_rectangle_arm(12, 12)
    assert report.ok and (2, 1, 3, 3) in report.equality_cases
    last = check_rectangle_last_row(12)
    assert last.ok and last.equality_cases == []
    # q = 1, t = 3: dropping the empty last row leaves (1^3)
    assert a0((1, 1, 1)) < a0((1, 1, 1, 1))


def test_block_shift_examples():
    # q = m = 1 is tight for every k
    for k in range(2, 6):
        lam, mu = (1,) * (k + 1), (2,) + (1,) * (k - 1)
        assert a0(lam) == k * a0(mu)
    assert check_block_shift(12).ok


def test_block_decomposition():
    assert block_decomposition((5, 3, 3, 2, 1)) == (5, 3, 2, (2, 1))
    assert block_decomposition((2, 2)) == (2, 2, 1, ())
    with pytest.raises(ValueError):
        block_decomposition((4,))


def test_ratio_product_and_dimension_ratio():
    assert check_ratio_product(20).ok
    # u = v = 5: (6/5)(4/5) = 24/25 < 1
    assert 6 * 4 < 5 * 5
    # (2,2) against (3,1): f ratio 2/3 < (m-q+1)/k = 1
    assert dimension((2, 2)) * 3 == dimension((3, 1)) * 2
    assert check_dimension_ratio(10).ok


def test_weighted_shift_tight_cases():
    report = check_weighted_shift(10)
    assert report.ok
    tight_shapes = {(c[0],) + (c[1],) * c[2] + c[3] for c in report.equality_cases}
    for n in range(2, 11):
        assert (1,) * n in tight_shapes
        if n >= 3:
            assert (n - 1, 1) in tight_shapes


def test_tail_report_has_no_expected_set():
    report = check_block_shift_tail(10)
    assert report.expected_equality is None
    assert report.violations == [] and report.ok


def test_zero_set_link():
    assert check_zero_set_link(10).ok


def test_grouped_runners():
    assert [r.lemma_id for r in check_rectangular_families(10, 10)] == [
        "rectangle_arm", "rectangle_last_row", "block_shift",
    ]
    assert len(check_tail_and_ratio(10, 10)) == 4


def test_report_json_shape():
    report = check_two_row(6)
    doc = json.loads(report.to_json())
    assert set(doc) == {"lemma_id", "cases_checked", "violations", "equality_cases"}
    assert doc["lemma_id"] == "two_row_shift"
    assert doc["cases_checked"] == report.cases_checked
    assert [2, 2] in doc["equality_cases"]
    tail = json.loads(check_block_shift_tail(6).to_json())
    assert all(isinstance(c[3], list) for c in tail["equality_cases"])


def test_failure_is_reported():
    report = LemmaReport("probe", expected_equality=[(1,)])
    assert not report.ok
    report.equality_cases.append((1,))
    assert report.ok
    report.violations.append((2,))
    assert not report.ok


def test_registry_and_full_run():
    assert len(ALL_CHECKS) == 9
    reports = run_all()
    assert len(reports) == 10
    assert all(r.ok for r in reports), [r.lemma_id for r in reports if not r.ok]
