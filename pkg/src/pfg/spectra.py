"""Eigenvalues of the k-point fixing graphs F(n, k).

F(n, k) is the Cayley graph on S_n whose connection set is every
permutation with exactly k fixed points; F(n, 0) is the derangement
graph. The connection set is a union of conjugacy classes, so each
irreducible character chi_lam contributes one integer eigenvalue
eta_lam(k) with multiplicity (f^lam)^2.

Two evaluation routes are provided. :func:`eta_k` walks the one-box
branching recurrence down to k = 0, where the derangement eigenvalues come
from the last-row recurrence (:func:`eta0_kuwong`). :func:`eta_direct` sums
class sizes times Murnaghan-Nakayama characters and shares nothing with the
recurrence path except the hook length formula.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from . import characters, partitions
from .characters import mn_character
from .errors import DomainError, InternalConsistencyError, TableInvariantError
from .partitions import (
    Partition,
    class_size,
    dimension,
    enumerate_derangement_types,
    enumerate_partitions,
    hook_size,
    one_box_removals,
    partition,
    partition_count,
    remove_first_column,
    remove_hook,
    remove_last_row,
)

_d_values = [1]
_d_lock = threading.Lock()


def d_n(n: int) -> int:
    """Number of derangements of n points: d_n = (-1)^n + n d_{n-1}, d_0 = 1."""
    if n < 0:
        raise DomainError("d_n needs n >= 0")
    if n >= len(_d_values):
        with _d_lock:
            for i in range(len(_d_values), n + 1):
                _d_values.append((-1) ** i + i * _d_values[i - 1])
    return _d_values[n]


def degree(n: int, k: int) -> int:
    """|S(n, k)|: permutations of n points fixing exactly k of them."""
    return comb(n, k) * d_n(n - k)


@lru_cache(maxsize=None)
def _renteln(lam: Partition) -> int:
    if not lam:
        return 1
    h = hook_size(lam)
    return (-1) ** h * _renteln(remove_hook(lam)) + (-1) ** (h + lam[0]) * h * _renteln(
        remove_first_column(lam)
    )


@lru_cache(maxsize=None)
def _kuwong(lam: Partition) -> int:
    if not lam:
        return 1
    last, rows = lam[-1], len(lam)
    return (-1) ** last * _kuwong(remove_last_row(lam)) + (-1) ** (rows - 1) * last * _kuwong(
        remove_first_column(lam)
    )


def eta0_renteln(lam) -> int:
    """Derangement-graph eigenvalue via the hook / first-column recurrence."""
    return _renteln(partition(lam))


def eta0_kuwong(lam) -> int:
    """Derangement-graph eigenvalue via the last-row / first-column recurrence."""
    return _kuwong(partition(lam))


@lru_cache(maxsize=None)
def _abs_eta0(lam: Partition) -> int:
    if len(lam) < 2:
        # single-row shapes terminate the recursion at d_n = |eta_(n)(0)|
        return d_n(sum(lam))
    return _abs_eta0(remove_last_row(lam)) + lam[-1] * _abs_eta0(remove_first_column(lam))


def abs_eta0(lam) -> int:
    """|eta_lam(0)| from the sign-free recurrence, for shapes with two or more rows."""
    lam = partition(lam)
    if lam and len(lam) < 2:
        raise DomainError(f"{lam} has fewer than two rows")
    return _abs_eta0(lam)


def _exact_quotient(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalConsistencyError(f"{what}: {num}/{den} is not an integer")
    return q


@lru_cache(maxsize=None)
def _eta_k(lam: Partition, k: int) -> int:
    if k == 0:
        return _kuwong(lam)
    n = sum(lam)
    total = sum(dimension(mu) * _eta_k(mu, k - 1) for mu in one_box_removals(lam))
    return _exact_quotient(n * total, k * dimension(lam), f"eta_{lam}({k})")


def _check_k(lam: Partition, k: int) -> None:
    if not 0 <= k < sum(lam):
        raise DomainError(f"need 0 <= k < |lambda|, got k={k} for {lam}")


def eta_k(lam, k: int) -> int:
    """Eigenvalue of F(|lam|, k) belonging to chi_lam, by the branching recurrence."""
    lam = partition(lam)
    _check_k(lam, k)
    return _eta_k(lam, k)


def eta_direct(lam, k: int) -> int:
    """Eigenvalue of F(|lam|, k) summed class by class over the connection set."""
    lam = partition(lam)
    _check_k(lam, k)
    n = sum(lam)
    total = 0
    for delta in enumerate_derangement_types(n - k):
        nu = delta + (1,) * k
        total += class_size(nu) * mn_character(lam, nu)
    return _exact_quotient(total, dimension(lam), f"direct eta_{lam}({k})")


def asp_sign(lam, k: int) -> int:
    """Sign of eta_lam(k) predicted from the shape alone, for k in {0, 1}."""
    lam = partition(lam)
    n = sum(lam)
    if k not in (0, 1):
        raise DomainError("sign pattern is only known for k = 0 and k = 1")
    if n < 2:
        raise DomainError("sign pattern needs |lambda| >= 2")
    below_first_row = n - lam[0]
    if k == 0:
        return (-1) ** below_first_row
    if lam == (n - 1, 1) or lam == (2,) + (1,) * (n - 2):
        return 0
    if len(lam) == 1:
        return 1
    return (-1) ** (below_first_row - 1)


@dataclass(frozen=True)
class SpectrumEntry:
    shape: Partition
    eta: int
    dim: int

    @property
    def multiplicity(self) -> int:
        return self.dim * self.dim


@dataclass(frozen=True)
class SpectrumTable:
    n: int
    k: int
    entries: tuple[SpectrumEntry, ...]

    def eigenvalue(self, shape) -> int:
        shape = partition(shape)
        for entry in self.entries:
            if entry.shape == shape:
                return entry.eta
        raise KeyError(shape)

    def moment(self, m: int) -> int:
        """Sum of multiplicity * eta**m, i.e. tr(A^m) of the adjacency matrix."""
        return sum(e.multiplicity * e.eta**m for e in self.entries)


def check_table(table: SpectrumTable) -> None:
    """Raise :class:`TableInvariantError` unless every aggregate identity holds."""
    n, k = table.n, table.k
    deg = degree(n, k)
    problems = []
    shapes = [e.shape for e in table.entries]
    if len(set(shapes)) != len(shapes) or len(shapes) != partition_count(n):
        problems.append(f"expected {partition_count(n)} distinct shapes, got {len(shapes)}")
    if table.moment(0) != factorial(n):
        problems.append("sum of multiplicities != n!")
    if table.moment(1) != 0:
        problems.append("trace is nonzero")
    if table.moment(2) != factorial(n) * deg:
        problems.append("second moment != n! * degree")
    if table.eigenvalue((n,)) != deg:
        problems.append("trivial character does not give the degree")
    if any(abs(e.eta) > deg for e in table.entries):
        problems.append("an eigenvalue exceeds the degree in absolute value")
    if problems:
        raise TableInvariantError(f"F({n},{k}): " + "; ".join(problems))


def spectrum(n: int, k: int) -> SpectrumTable:
    """Full spectrum of F(n, k), one entry per partition of n in enumeration order."""
    if n < 1 or not 0 <= k < n:
        raise DomainError(f"need n >= 1 and 0 <= k < n, got n={n}, k={k}")
    entries = tuple(
        SpectrumEntry(lam, _eta_k(lam, k), dimension(lam)) for lam in enumerate_partitions(n)
    )
    table = SpectrumTable(n, k, entries)
    check_table(table)
    return table


def clear_caches() -> None:
    """Drop every memo table (used to time computations from a cold start)."""
    for fn in (_renteln, _kuwong, _abs_eta0, _eta_k, characters._mn,
               partitions.dimension, partitions.class_size, partitions.enumerate_partitions):
        fn.cache_clear()
