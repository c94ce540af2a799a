from collections import Counter
from math import factorial

import pytest

from pfg.characters import branching_sum, mn_character, rim_hook_removals
from pfg.errors import DomainError
from pfg.partitions import class_size, dimension, enumerate_partitions

SHAPES_9 = [lam for n in range(1, 10) for lam in enumerate_partitions(n)]


def test_trivial_and_sign_characters():
    for n in range(1, 9):
        for mu in enumerate_partitions(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_standard_character_is_fixed_points_minus_one():
    # the permutation representation on n points is trivial + standard
    for n in range(2, 10):
        for mu in enumerate_partitions(n):
            assert mn_character((n - 1, 1), mu) == Counter(mu)[1] - 1
    assert mn_character((2, 1), (3,)) == -1


def test_identity_class_gives_dimension():
    for lam in SHAPES_9:
        assert mn_character(lam, (1,) * sum(lam)) == dimension(lam)


def test_size_mismatch_is_an_error():
    with pytest.raises(DomainError):
        mn_character((2, 1), (2,))


def test_rim_hook_removals():
    assert rim_hook_removals((2, 1), 3) == [((), -1)]
    assert rim_hook_removals((2, 2), 3) == [((1,), -1)]
    assert rim_hook_removals((2, 2), 4) == []
    assert rim_hook_removals((3, 1), 2) == [((1, 1), 1)]
    assert rim_hook_removals((2, 2, 1), 2) == [((1, 1, 1), -1)]


@pytest.mark.parametrize("n", range(1, 9))
def test_row_orthogonality(n):
    shapes = enumerate_partitions(n)
    for lam in shapes:
        for other in shapes:
            inner = sum(class_size(mu) * mn_character(lam, mu) * mn_character(other, mu) for mu in shapes)
            assert inner == (factorial(n) if lam == other else 0)


def test_branching_examples():
    assert branching_sum((3, 3, 1), (6, 1)) == mn_character((3, 3), (6,)) + mn_character((3, 2, 1), (6,))
    assert branching_sum((3, 3, 1), (6, 1)) == mn_character((3, 3, 1), (6, 1))
    assert branching_sum((4,), (3, 1)) == 1
    assert branching_sum((2, 1), (1, 1, 1)) == 2 == dimension((2, 1))
    with pytest.raises(DomainError):
        branching_sum((2, 1), (3,))


@pytest.mark.parametrize("lam", SHAPES_9)
def test_branching_identity(lam):
    for nu in enumerate_partitions(sum(lam)):
        if nu[-1] == 1:
            assert mn_character(lam, nu) == branching_sum(lam, nu)


def test_values_are_python_ints():
    assert all(type(mn_character(lam, lam)) is int for lam in SHAPES_9)
