import itertools
import random
from fractions import Fraction

import pytest

from pc_postman.matching import hungarian_min_perfect_matching


def brute_force(cost):
    """Lexicographically smallest minimum-cost permutation."""
    n = len(cost)
    return min((sum(cost[i][p[i]] for i in range(n)), list(p))
               for p in itertools.permutations(range(n)))


def test_empty_and_single():
    assert hungarian_min_perfect_matching([]) == ([], 0)
    assert hungarian_min_perfect_matching([[7]]) == ([0], 7)


def test_known_instance():
    cost = [[4, 1, 3], [2, 0, 5], [3, 2, 2]]
    assert hungarian_min_perfect_matching(cost) == ([1, 0, 2], 5)


def test_ties_pick_smallest_assignment():
    assert hungarian_min_perfect_matching([[1, 1], [1, 1]]) == ([0, 1], 2)
    assert hungarian_min_perfect_matching([[0] * 4] * 4)[0] == [0, 1, 2, 3]


def test_fractions_are_exact():
    cost = [[Fraction(1, 3), Fraction(1, 2)], [Fraction(1, 6), Fraction(1, 7)]]
    assign, total = hungarian_min_perfect_matching(cost)
    assert assign == [0, 1]
    assert total == Fraction(1, 3) + Fraction(1, 7)


def test_rejects_bad_matrices():
    with pytest.raises(ValueError):
        hungarian_min_perfect_matching([[1, 2]])
    with pytest.raises(ValueError):
        hungarian_min_perfect_matching([[1, -2], [0, 0]])


@pytest.mark.parametrize("seed", range(150))
def test_matches_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    hi = rng.choice([1, 2, 5, 20])
    cost = [[rng.randint(0, hi) for _ in range(n)] for _ in range(n)]
    total, perm = brute_force(cost)
    assert hungarian_min_perfect_matching(cost) == (perm, total)
