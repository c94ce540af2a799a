"""Irreducible characters of the symmetric group by Murnaghan-Nakayama.

This module is deliberately independent of the eigenvalue recurrences in
:mod:`pfg.spectra`; it is the brute-force side of their cross-checks.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError
from .partitions import Partition, one_box_removals, partition


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return partition(b - (length - 1 - i) for i, b in enumerate(beta))


def rim_hook_removals(lam: Partition, length: int) -> list[tuple[Partition, int]]:
    """Every way to strip a border strip of ``length`` boxes from ``lam``.

    Returns ``(remaining shape, (-1)**height)`` pairs. Works on the beta-set
    (first column hook lengths): removing a strip of size ``length`` moves one
    bead from position ``b`` to the empty position ``b - length``, and the
    strip height is the number of beads strictly between the two.
    """
    size = len(lam)
    beta = [lam[i] + size - 1 - i for i in range(size)]
    occupied = set(beta)
    out = []
    for b in beta:
        target = b - length
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        moved = [target if c == b else c for c in beta]
        out.append((_from_beta(moved), -1 if height % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _mn(shape: Partition, cycle_type: Partition) -> int:
    if not cycle_type:
        return 1
    first, rest = cycle_type[0], cycle_type[1:]
    return sum(sign * _mn(sub, rest) for sub, sign in rim_hook_removals(shape, first))


def mn_character(shape, cycle_type) -> int:
    """chi_shape evaluated on the class with the given cycle type.

    The largest cycle is consumed first. Both arguments may be any
    iterable of parts; they are normalized before lookup.
    """
    shape, cycle_type = partition(shape), partition(cycle_type)
    if sum(shape) != sum(cycle_type):
        raise DomainError(
            f"shape {shape} and cycle type {cycle_type} have different sizes"
        )
    return _mn(shape, cycle_type)


def branching_sum(shape, cycle_type_with_fixed_point) -> int:
    """Sum of chi_mu(nu minus its trailing 1) over one-box removals mu of shape.

    Restricting to S_{n-1} is valid only when the class has a fixed point,
    so ``nu`` must end in a part equal to 1.
    """
    shape, nu = partition(shape), partition(cycle_type_with_fixed_point)
    if not nu or nu[-1] != 1:
        raise DomainError(f"cycle type {nu} has no fixed point")
    if sum(shape) != sum(nu):
        raise DomainError(f"shape {shape} and cycle type {nu} have different sizes")
    reduced = nu[:-1]
    return sum(_mn(mu, reduced) for mu in one_box_removals(shape))
