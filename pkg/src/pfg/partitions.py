"""Integer partitions and Ferrers-diagram surgery.

A partition is a plain tuple of positive integers in weakly decreasing
order; ``()`` is the unique partition of 0. Every function here returns
canonical tuples, so results can be used directly as dictionary keys.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a canonical partition.

    Zero parts are dropped and the rest sorted largest-first. Negative
    parts are rejected.
    """
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> enumerate_partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def enumerate_derangement_types(m: int) -> tuple[Partition, ...]:
    """Partitions of ``m`` with no part equal to 1.

    These are the cycle types of fixed-point-free permutations of ``m``
    points; ``()`` is returned for ``m == 0`` and nothing for ``m == 1``.
    """
    return tuple(lam for lam in enumerate_partitions(m) if not lam or lam[-1] >= 2)


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > i:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[i - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            j += 1
        p[i] = total
    return p[n]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    """Hook length of every box, keyed by 1-based ``(row, column)``."""
    cols = conjugate(lam)
    return {
        (a, b): (lam[a - 1] - b) + (cols[b - 1] - a) + 1
        for a in range(1, len(lam) + 1)
        for b in range(1, lam[a - 1] + 1)
    }


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    """Degree f^lam of the irreducible character, by the hook length formula."""
    n = sum(lam)
    hooks = prod(hook_lengths(lam).values())
    f, rem = divmod(factorial(n), hooks)
    assert rem == 0
    return f


def z_value(lam: Partition) -> int:
    """Order of the centralizer of a permutation with cycle type ``lam``."""
    return prod(j**m * factorial(m) for j, m in Counter(lam).items())


@lru_cache(maxsize=None)
def class_size(lam: Partition) -> int:
    """Number of permutations of ``sum(lam)`` points with cycle type ``lam``."""
    size, rem = divmod(factorial(sum(lam)), z_value(lam))
    assert rem == 0
    return size


def _require_nonempty(lam: Partition) -> None:
    if not lam:
        raise ValueError("operation undefined on the empty partition")


def remove_first_column(lam: Partition) -> Partition:
    _require_nonempty(lam)
    return tuple(p - 1 for p in lam if p > 1)


def remove_hook(lam: Partition) -> Partition:
    """Delete the first row and first column of the diagram.

    The removed hook has ``lam[0] + len(lam) - 1`` boxes.
    """
    _require_nonempty(lam)
    return tuple(p - 1 for p in lam[1:] if p > 1)


def remove_last_row(lam: Partition) -> Partition:
    _require_nonempty(lam)
    return lam[:-1]


def hook_size(lam: Partition) -> int:
    _require_nonempty(lam)
    return lam[0] + len(lam) - 1


def one_box_removals(lam: Partition) -> list[Partition]:
    """Partitions obtained by deleting one removable corner, ordered by row."""
    out = []
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            out.append(tuple(p - (j == i) for j, p in enumerate(lam) if p - (j == i)))
    return out


def format_partition(lam: Sequence[int]) -> str:
    """Comma-joined decimal parts; the empty partition becomes ``""``."""
    return ",".join(str(p) for p in lam)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    parts = tuple(int(tok) for tok in text.split(","))
    if not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return parts
