"""Exhaustive checks of the derangement-eigenvalue inequalities.

Each check walks every parameter tuple in a bounded range, records the
tuples where the inequality fails (there should be none) and the tuples
where it is tight, and compares the tight set with the known
characterization where one exists. All comparisons are on integers.

Several checks share one partition family. With m >= q >= 1, k >= 1 and a
tail alpha whose parts are all below q, write

    lam = (m, q^k, alpha)        mu = (m + 1, q^(k-1), q - 1, alpha)

so that mu moves the last box of the q-block up to the first row. Every
partition with at least two rows has exactly one such decomposition
(m = lam_1, q = lam_2, k = number of rows equal to q below the first).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .partitions import Partition, dimension, enumerate_partitions, partition
from .spectra import eta0_kuwong, eta_k

HOOK_CHAIN = "hook_chain"
TWO_ROW_SHIFT = "two_row_shift"
RECTANGLE_ARM = "rectangle_arm"
RECTANGLE_LAST_ROW = "rectangle_last_row"
BLOCK_SHIFT = "block_shift"
BLOCK_SHIFT_TAIL = "block_shift_tail"
RATIO_PRODUCT = "ratio_product"
DIMENSION_RATIO = "dimension_ratio"
WEIGHTED_SHIFT = "weighted_shift"
ZERO_SET_LINK = "zero_set_link"

SINGLE_CAP = 24
TAIL_CAP = 20


@dataclass
class LemmaReport:
    lemma_id: str
    cases_checked: int = 0
    violations: list = field(default_factory=list)
    equality_cases: list = field(default_factory=list)
    # None when no characterization of the tight cases is known
    expected_equality: Optional[list] = None

    @property
    def equality_matches(self) -> bool:
        if self.expected_equality is None:
            return True
        return sorted(self.equality_cases) == sorted(self.expected_equality)

    @property
    def ok(self) -> bool:
        return not self.violations and self.equality_matches

    def to_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "cases_checked": self.cases_checked,
            "violations": [_jsonable(v) for v in self.violations],
            "equality_cases": [_jsonable(v) for v in self.equality_cases],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _abs0(lam) -> int:
    return abs(eta0_kuwong(lam))


def _record(report: LemmaReport, case, lhs: int, rhs: int, strict: bool = False) -> None:
    report.cases_checked += 1
    if lhs > rhs or (strict and lhs == rhs):
        report.violations.append(case)
    elif lhs == rhs:
        report.equality_cases.append(case)


def check_hook_family(n_max: int = SINGLE_CAP) -> LemmaReport:
    """f^lam |eta_lam(0)| <= f^mu |eta_mu(0)| for lam = (n-p, 1^p), mu = (n-p+1, 1^(p-1)).

    Tight exactly when p = 1 or n - p = 1. Cases are ``(n, p)``.
    """
    report = LemmaReport(HOOK_CHAIN, expected_equality=[])
    for n in range(3, n_max + 1):
        for p in range(1, n):
            lam = (n - p,) + (1,) * p
            mu = (n - p + 1,) + (1,) * (p - 1)
            _record(
                report, (n, p),
                dimension(lam) * _abs0(lam), dimension(mu) * _abs0(mu),
            )
            if p == 1 or n - p == 1:
                report.expected_equality.append((n, p))
    return report


def check_two_row(max_size: int = SINGLE_CAP) -> LemmaReport:
    """(m-q+1) |eta_(m,q)(0)| <= |eta_(m+1,q-1)(0)| for m >= q >= 1.

    Tight exactly when q = 1 or m = q = 2. Cases are ``(m, q)``.
    """
    report = LemmaReport(TWO_ROW_SHIFT, expected_equality=[])
    for m in range(1, max_size):
        for q in range(1, min(m, max_size - m) + 1):
            _record(report, (m, q), (m - q + 1) * _abs0((m, q)), _abs0((m + 1, q - 1)))
            if q == 1 or m == q == 2:
                report.expected_equality.append((m, q))
    return report


def check_rectangle_arm(max_size: int = SINGLE_CAP, k_max: int = SINGLE_CAP) -> LemmaReport:
    """(m-q+k+1) |eta_(q^(t+1))(0)| <= k |eta_(m+1, q^t)(0)| for m > q >= 1, k >= t >= 1.

    k is a free weight, swept up to ``k_max``. Tight exactly when q = 1,
    m = 2 and k = t. Cases are ``(m, q, k, t)``.
    """
    report = LemmaReport(RECTANGLE_ARM, expected_equality=[])
    for q in range(1, max_size):
        for t in range(1, max_size):
            for m in range(q + 1, max_size - q * t):
                square = _abs0((q,) * (t + 1))
                arm = _abs0((m + 1,) + (q,) * t)
                for k in range(t, k_max + 1):
                    _record(report, (m, q, k, t), (m - q + k + 1) * square, k * arm)
                    if q == 1 and m == 2 and k == t:
                        report.expected_equality.append((m, q, k, t))
    return report


def check_rectangle_last_row(max_size: int = SINGLE_CAP) -> LemmaReport:
    """|eta_(q^t, q-1)(0)| < |eta_(q^t, q)(0)| for q, t >= 1. Cases are ``(q, t)``."""
    report = LemmaReport(RECTANGLE_LAST_ROW, expected_equality=[])
    for q in range(1, max_size + 1):
        for t in range(1, max_size // q):
            lam = partition((q,) * t + (q - 1,))
            _record(report, (q, t), _abs0(lam), _abs0((q,) * (t + 1)), strict=True)
    return report


def check_block_shift(max_size: int = SINGLE_CAP) -> LemmaReport:
    """(m-q+1) |eta_(m, q^k)(0)| <= k |eta_(m+1, q^(k-1), q-1)(0)| for m >= q >= 1, k >= 2.

    Tight exactly when q = m = 1. Cases are ``(m, q, k)``.
    """
    report = LemmaReport(BLOCK_SHIFT, expected_equality=[])
    for q in range(1, max_size):
        for k in range(2, max_size // q + 1):
            for m in range(q, max_size - k * q + 1):
                lam, mu = _block_pair(m, q, k, ())
                _record(report, (m, q, k), (m - q + 1) * _abs0(lam), k * _abs0(mu))
                if q == m == 1:
                    report.expected_equality.append((m, q, k))
    return report


def check_rectangular_families(
    max_size: int = SINGLE_CAP, k_max: int = SINGLE_CAP
) -> list[LemmaReport]:
    return [
        check_rectangle_arm(max_size, k_max),
        check_rectangle_last_row(max_size),
        check_block_shift(max_size),
    ]


def _block_pair(m: int, q: int, k: int, alpha: Partition) -> tuple[Partition, Partition]:
    lam = (m,) + (q,) * k + alpha
    mu = partition((m + 1,) + (q,) * (k - 1) + (q - 1,) + alpha)
    return lam, mu


def block_decomposition(lam: Partition) -> tuple[int, int, int, Partition]:
    """Split a partition with two or more rows into ``(m, q, k, alpha)``."""
    if len(lam) < 2:
        raise ValueError(f"{lam} has fewer than two rows")
    m, q = lam[0], lam[1]
    k = sum(1 for part in lam[1:] if part == q)
    return m, q, k, lam[1 + k:]


def _block_family(max_size: int, min_size: int = 2) -> Iterator[tuple]:
    for n in range(min_size, max_size + 1):
        for lam in enumerate_partitions(n):
            if len(lam) >= 2:
                m, q, k, alpha = block_decomposition(lam)
                yield (m, q, k, alpha), lam, _block_pair(m, q, k, alpha)[1]


def check_block_shift_tail(max_size: int = TAIL_CAP) -> LemmaReport:
    """(m-q+1) |eta_lam(0)| <= k |eta_mu(0)| over the whole block family.

    No characterization of the tight cases is claimed; they are recorded only.
    """
    report = LemmaReport(BLOCK_SHIFT_TAIL)
    for case, lam, mu in _block_family(max_size):
        m, q, k, _ = case
        _record(report, case, (m - q + 1) * _abs0(lam), k * _abs0(mu))
    return report


def check_ratio_product(bound: int = 100) -> LemmaReport:
    """((u+1)/u) ((v-1)/v) < 1 for 1 <= v <= u <= bound, cross-multiplied."""
    report = LemmaReport(RATIO_PRODUCT, expected_equality=[])
    for u in range(1, bound + 1):
        for v in range(1, u + 1):
            _record(report, (u, v), (u + 1) * (v - 1), u * v, strict=True)
    return report


def check_dimension_ratio(max_size: int = TAIL_CAP) -> LemmaReport:
    """f^lam / f^mu < (m-q+1) / k over the block family with q >= 2."""
    report = LemmaReport(DIMENSION_RATIO, expected_equality=[])
    for case, lam, mu in _block_family(max_size):
        m, q, k, _ = case
        if q >= 2:
            _record(report, case, k * dimension(lam), (m - q + 1) * dimension(mu), strict=True)
    return report


def check_weighted_shift(max_size: int = TAIL_CAP) -> LemmaReport:
    """f^lam |eta_lam(0)| <= f^mu |eta_mu(0)| over the block family.

    Tight exactly when lam = (1^n) or lam = (n-1, 1).
    """
    report = LemmaReport(WEIGHTED_SHIFT, expected_equality=[])
    for case, lam, mu in _block_family(max_size):
        n = sum(lam)
        _record(report, case, dimension(lam) * _abs0(lam), dimension(mu) * _abs0(mu))
        if lam == (1,) * n or lam == (n - 1, 1):
            report.expected_equality.append(case)
    return report


def check_tail_and_ratio(max_size: int = TAIL_CAP, bound: int = 100) -> list[LemmaReport]:
    return [
        check_block_shift_tail(max_size),
        check_ratio_product(bound),
        check_dimension_ratio(max_size),
        check_weighted_shift(max_size),
    ]


def check_zero_set_link(n_max: int = 12) -> LemmaReport:
    """Tight cases of the weighted shift are exactly the zeros of eta(1).

    For lam with lam_1 > lam_2, the one-box removals of lam include
    lam minus its first-row box and lam minus its lowest q-row box, and
    eta_lam(1) = 0 iff the weighted shift is tight on the first of them.
    Cases are shapes of size n, 3 <= n <= n_max; violations list shapes
    present on one side only.
    """
    report = LemmaReport(ZERO_SET_LINK)
    for n in range(3, n_max + 1):
        zeros, tight = set(), set()
        for lam in enumerate_partitions(n):
            if len(lam) < 2 or lam[0] == lam[1]:
                continue
            report.cases_checked += 1
            if eta_k(lam, 1) == 0:
                zeros.add(lam)
            smaller = (lam[0] - 1,) + lam[1:]
            m, q, k, alpha = block_decomposition(smaller)
            mu = _block_pair(m, q, k, alpha)[1]
            if dimension(smaller) * _abs0(smaller) == dimension(mu) * _abs0(mu):
                tight.add(lam)
        report.violations.extend(sorted(zeros ^ tight))
        report.equality_cases.extend(sorted(zeros & tight))
    return report


ALL_CHECKS: dict[str, Callable[[], LemmaReport]] = {
    HOOK_CHAIN: check_hook_family,
    TWO_ROW_SHIFT: check_two_row,
    RECTANGLE_ARM: check_rectangle_arm,
    RECTANGLE_LAST_ROW: check_rectangle_last_row,
    BLOCK_SHIFT: check_block_shift,
    BLOCK_SHIFT_TAIL: check_block_shift_tail,
    RATIO_PRODUCT: check_ratio_product,
    DIMENSION_RATIO: check_dimension_ratio,
    WEIGHTED_SHIFT: check_weighted_shift,
}


def run_all(single_cap: int = SINGLE_CAP, tail_cap: int = TAIL_CAP) -> list[LemmaReport]:
    return [
        check_hook_family(single_cap),
        check_two_row(single_cap),
        *check_rectangular_families(single_cap, single_cap),
        *check_tail_and_ratio(tail_cap),
        check_zero_set_link(min(tail_cap, 12)),
    ]
