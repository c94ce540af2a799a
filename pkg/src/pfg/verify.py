"""Named verification suites driven by ``pfg verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import inequality_suite
from .characters import branching_sum, mn_character
from .errors import InternalConsistencyError, TableInvariantError
from .graph_oracle import build_graph, trace_moment
from .partitions import enumerate_partitions
from .spectra import (
    abs_eta0,
    asp_sign,
    degree,
    eta0_kuwong,
    eta0_renteln,
    eta_direct,
    eta_k,
    spectrum,
)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.cases} cases, "
            f"{len(self.failures)} failures ({self.seconds:.2f}s)"
        )


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def suite_asp0(max_n: int = 14) -> SuiteResult:
    res = SuiteResult("asp0")
    for n in range(2, max_n + 1):
        for lam in enumerate_partitions(n):
            res.cases += 1
            eta = eta0_kuwong(lam)
            if eta == 0 or _sign(eta) != asp_sign(lam, 0):
                res.failures.append(f"{lam}: eta={eta}")
    return res


def sign_agreement(n: int, k: int) -> tuple[int, int, int]:
    """``(shapes, zeros, agreements)`` of sign(eta_lam(k)) with (-1)^(|lam|-lam_1-k)."""
    shapes = enumerate_partitions(n)
    zeros = agree = 0
    for lam in shapes:
        eta = eta_k(lam, k)
        zeros += eta == 0
        agree += eta != 0 and _sign(eta) == (-1) ** (n - lam[0] - k)
    return len(shapes), zeros, agree


def suite_asp1(max_n: int = 12) -> SuiteResult:
    res = SuiteResult("asp1")
    for n in range(2, max_n + 1):
        zero_set = []
        for lam in enumerate_partitions(n):
            res.cases += 1
            eta = eta_k(lam, 1)
            if eta == 0:
                zero_set.append(lam)
            if _sign(eta) != asp_sign(lam, 1):
                res.failures.append(f"{lam}: eta={eta}, predicted sign {asp_sign(lam, 1)}")
        expected = {(n - 1, 1), (2,) + (1,) * (n - 2)}
        if set(zero_set) != expected:
            res.failures.append(f"n={n}: zero set {zero_set}")
        res.notes.append(f"n={n}: zero set {sorted(zero_set, reverse=True)}")
    # empirical only: no sign pattern is claimed for k >= 2
    for n in range(3, min(max_n, 10) + 1):
        shapes, zeros, agree = sign_agreement(n, 2)
        res.notes.append(f"k=2 n={n}: {agree}/{shapes} follow (-1)^(|lam|-lam_1-2), {zeros} zeros")
    return res


def suite_recurrence_xcheck(max_n: int = 14) -> SuiteResult:
    res = SuiteResult("recurrence-xcheck")
    for n in range(0, max_n + 1):
        for lam in enumerate_partitions(n):
            res.cases += 1
            a, b = eta0_renteln(lam), eta0_kuwong(lam)
            if a != b:
                res.failures.append(f"{lam}: hook recurrence {a} != last-row recurrence {b}")
            if len(lam) >= 2 and abs_eta0(lam) != abs(b):
                res.failures.append(f"{lam}: |eta| recurrence {abs_eta0(lam)} != {abs(b)}")
    return res


def suite_oracle_xcheck(max_n: int = 9) -> SuiteResult:
    res = SuiteResult("oracle-xcheck")
    for n in range(2, max_n + 1):
        shapes = enumerate_partitions(n)
        for lam in shapes:
            for k in range(0, n - 1):
                res.cases += 1
                try:
                    a, b = eta_k(lam, k), eta_direct(lam, k)
                except InternalConsistencyError as exc:
                    res.failures.append(str(exc))
                    continue
                if a != b:
                    res.failures.append(f"{lam}, k={k}: recurrence {a} != character sum {b}")
            for nu in shapes:
                if nu[-1] == 1 and mn_character(lam, nu) != branching_sum(lam, nu):
                    res.failures.append(f"branching fails at chi_{lam}({nu})")
    return res


def suite_moments(max_n: int = 6, max_m: int = 4) -> SuiteResult:
    res = SuiteResult("moments")
    for n in range(1, max_n + 1):
        for k in (0, 1, 2):
            if k >= n:
                continue
            g = build_graph(n, k)
            if g.has_self_loops() or not g.is_symmetric():
                res.failures.append(f"F({n},{k}): adjacency not simple and symmetric")
            if g.degree != degree(n, k):
                res.failures.append(f"F({n},{k}): degree {g.degree}")
            table = spectrum(n, k)
            for m in range(0, max_m + 1):
                res.cases += 1
                walks, algebra = trace_moment(g, m), table.moment(m)
                if walks != algebra:
                    res.failures.append(f"F({n},{k}) m={m}: walks {walks} != {algebra}")
    return res


def suite_inequalities(max_n: Optional[int] = None) -> SuiteResult:
    res = SuiteResult("inequalities")
    if max_n is None:
        reports = inequality_suite.run_all()
    else:
        reports = inequality_suite.run_all(max_n, max_n)
    for report in reports:
        res.cases += report.cases_checked
        if report.violations:
            res.failures.append(f"{report.lemma_id}: violations {report.violations[:5]}")
        if not report.equality_matches:
            res.failures.append(f"{report.lemma_id}: tight cases differ from characterization")
        res.notes.append(
            f"{report.lemma_id}: {report.cases_checked} cases, "
            f"{len(report.equality_cases)} tight"
        )
    return res


def suite_mass(max_n: int = 10) -> SuiteResult:
    res = SuiteResult("mass")
    for n in range(1, max_n + 1):
        for k in range(0, n):
            res.cases += 1
            try:
                spectrum(n, k)
            except (TableInvariantError, InternalConsistencyError) as exc:
                res.failures.append(str(exc))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "asp0": suite_asp0,
    "asp1": suite_asp1,
    "recurrence-xcheck": suite_recurrence_xcheck,
    "oracle-xcheck": suite_oracle_xcheck,
    "moments": suite_moments,
    "inequalities": suite_inequalities,
    "mass": suite_mass,
}


def run_suite(name: str, max_n: Optional[int] = None) -> SuiteResult:
    fn = SUITES[name]
    start = time.perf_counter()
    res = fn() if max_n is None else fn(max_n)
    res.seconds = time.perf_counter() - start
    return res
