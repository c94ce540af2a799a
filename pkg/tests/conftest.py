from itertools import permutations

import pytest
from hypothesis import strategies as st

from pfg.partitions import one_box_removals

ACCEPTANCE_LINES = []


def partitions_strategy(max_part=8, max_rows=6, min_size=0):
    """Random partitions built from an unordered bag of parts."""
    return (
        st.lists(st.integers(1, max_part), max_size=max_rows)
        .map(lambda parts: tuple(sorted(parts, reverse=True)))
        .filter(lambda lam: sum(lam) >= min_size)
    )


def count_syt_brute(lam):
    """Standard Young tableaux of shape lam, by trying every filling (|lam| <= 7)."""
    boxes = [(a, b) for a, part in enumerate(lam) for b in range(part)]
    count = 0
    for filling in permutations(range(len(boxes))):
        value = dict(zip(boxes, filling))
        if all(
            (b == 0 or value[(a, b - 1)] < v) and (a == 0 or value[(a - 1, b)] < v)
            for (a, b), v in value.items()
        ):
            count += 1
    return count


def count_syt_branching(lam, _memo={(): 1}):
    """SYT count by deleting the box holding the largest entry."""
    if lam not in _memo:
        _memo[lam] = sum(count_syt_branching(mu) for mu in one_box_removals(lam))
    return _memo[lam]


def partition_count_series(n):
    """p(n) as a coefficient of prod 1/(1 - x^j), by polynomial multiplication."""
    coeffs = [1] + [0] * n
    for j in range(1, n + 1):
        for i in range(j, n + 1):
            coeffs[i] += coeffs[i - j]
    return coeffs[n]


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
