"""Explicit F(n, k) on all n! permutations, for checking the algebra by brute force.

Permutations are tuples of 1-based images, so ``(2, 1, 4, 3)`` swaps 1 with
2 and 3 with 4. Internally everything is 0-based numpy arrays; a
permutation is located by its base-n code, which preserves lexicographic
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import DomainError
from .partitions import Partition, class_size, enumerate_derangement_types
from .spectra import degree

MAX_GRAPH_N = 7


def _check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise DomainError(f"{tuple(p)} is not a permutation of 1..{len(p)}")


def cycle_type(p: Sequence[int]) -> Partition:
    _check_perm(p)
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = p[i] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def fixed_point_count(p: Sequence[int]) -> int:
    _check_perm(p)
    return sum(1 for i, image in enumerate(p, start=1) if image == i)


def _all_perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


def _codes(rows: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return rows @ weights


def _fixed_counts(rows: np.ndarray) -> np.ndarray:
    return (rows == np.arange(rows.shape[1])).sum(axis=1)


@dataclass(frozen=True)
class CayleyGraphInstance:
    n: int
    k: int
    perms: np.ndarray  # (n!, n), 0-based, lexicographic
    adjacency: np.ndarray  # (n!, degree), each row sorted ascending

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def degree(self) -> int:
        return self.adjacency.shape[1]

    @property
    def vertices(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) + 1 for x in row) for row in self.perms]

    def neighbors(self, v: int) -> list[int]:
        return [int(x) for x in self.adjacency[v]]

    def has_self_loops(self) -> bool:
        return bool((self.adjacency == np.arange(self.order)[:, None]).any())

    def is_symmetric(self) -> bool:
        src = np.repeat(np.arange(self.order), self.degree)
        dst = self.adjacency.ravel()
        forward = np.sort(src * self.order + dst)
        backward = np.sort(dst * self.order + src)
        return bool(np.array_equal(forward, backward))

    def dump(self) -> str:
        """One line per vertex: ``<index>: <neighbors space-separated>``."""
        return "".join(
            f"{v}: {' '.join(str(int(u)) for u in row)}\n"
            for v, row in enumerate(self.adjacency)
        )


def build_graph(n: int, k: int) -> CayleyGraphInstance:
    """F(n, k): g ~ h iff g h^-1 fixes exactly k points.

    The neighbors of h are s h for s in the connection set, so each
    generator contributes one column of the neighbor table.
    """
    if not 1 <= n <= MAX_GRAPH_N:
        raise DomainError(f"explicit graphs are limited to 1 <= n <= {MAX_GRAPH_N}")
    if not 0 <= k < n:
        raise DomainError(f"need 0 <= k < n, got k={k}")
    perms = _all_perms(n)
    codes = _codes(perms, n)
    gens = perms[_fixed_counts(perms) == k]
    adjacency = np.empty((len(perms), len(gens)), dtype=np.int64)
    for c, s in enumerate(gens):
        adjacency[:, c] = np.searchsorted(codes, _codes(s[perms], n))
    adjacency.sort(axis=1)
    graph = CayleyGraphInstance(n, k, perms, adjacency)
    if graph.degree != degree(n, k):
        raise AssertionError(f"F({n},{k}) has degree {graph.degree}, expected {degree(n, k)}")
    return graph


def _apply(adjacency: np.ndarray, x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    for c in range(adjacency.shape[1]):
        out += x[adjacency[:, c]]
    return out


def trace_moment(g: CayleyGraphInstance, m: int, block: int = 1024) -> int:
    """tr(A^m), the number of closed walks of length m, computed exactly.

    Columns of the identity are pushed through the neighbor table in
    blocks. With a = m // 2 and b = m - a, tr(A^m) is the elementwise
    product sum of A^a and A^b, using the symmetry of A.
    """
    if not 0 <= m <= 6:
        raise DomainError("trace moments are supported for 0 <= m <= 6")
    if m == 0:
        return g.order
    if not g.is_symmetric():
        raise AssertionError("adjacency is not symmetric")
    a, b = m // 2, m - m // 2
    # int64 is exact while every partial sum stays below order * degree**m
    dtype = np.int64 if g.order * g.degree**m < 2**62 else object
    total = 0
    for lo in range(0, g.order, block):
        cols = np.arange(lo, min(lo + block, g.order))
        x = np.zeros((g.order, len(cols)), dtype=dtype)
        x[cols, np.arange(len(cols))] = 1
        for _ in range(a):
            x = _apply(g.adjacency, x)
        y = _apply(g.adjacency, x) if b > a else x
        total += int((x * y).sum())
    return total


def class_union_check(n: int, k: int) -> bool:
    """Permutations fixing exactly k points == all conjugates of the extended
    derangements of the first n - k points."""
    if not 1 <= n <= MAX_GRAPH_N or not 0 <= k < n:
        raise DomainError(f"need 1 <= n <= {MAX_GRAPH_N} and 0 <= k < n")
    perms = _all_perms(n)
    left = np.unique(_codes(perms[_fixed_counts(perms) == k], n))
    head = _all_perms(n - k)
    derangements = head[_fixed_counts(head) == 0]
    tail = np.broadcast_to(np.arange(n - k, n), (len(derangements), k))
    extended = np.hstack([derangements, tail])
    conjugates = []
    for sigma in perms:
        inverse = np.argsort(sigma)
        conjugates.append(_codes(inverse[extended[:, sigma]], n))
    right = np.unique(np.concatenate(conjugates)) if conjugates else np.empty(0, np.int64)
    return bool(np.array_equal(left, right))


def class_size_ratio_violations(n_max: int = 10) -> tuple[int, list[tuple[int, int, Partition]]]:
    """Check N_{S_n}((delta, 1^k)) = (n / k) N_{S_{n-1}}((delta, 1^(k-1))).

    Covers every derangement type delta of n - k for n <= n_max and
    1 <= k <= n - 2. Returns ``(cases checked, violations)``.
    """
    checked, bad = 0, []
    for n in range(3, n_max + 1):
        for k in range(1, n - 1):
            for delta in enumerate_derangement_types(n - k):
                checked += 1
                lhs = class_size(delta + (1,) * k)
                rhs = Fraction(n, k) * class_size(delta + (1,) * (k - 1))
                if lhs != rhs:
                    bad.append((n, k, delta))
    return checked, bad


def brute_force_class_size(cycle: Partition) -> int:
    """Count permutations with the given cycle type by enumeration (n <= 8)."""
    n = sum(cycle)
    if n > 8:
        raise DomainError("brute-force class counting is limited to n <= 8")
    if n == 0:
        return 1
    return sum(1 for p in permutations(range(1, n + 1)) if cycle_type(p) == cycle)


def brute_force_derangements(n: int) -> int:
    if n > 9:
        raise DomainError("brute-force derangement counting is limited to n <= 9")
    return sum(1 for p in permutations(range(n)) if all(p[i] != i for i in range(n))) if n else 1
