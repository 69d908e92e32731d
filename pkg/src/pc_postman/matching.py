"""Minimum-cost perfect matching on a square cost matrix (Hungarian method).

All arithmetic is on Python integers: rational costs are scaled by the
common denominator first, so there are no floating-point comparisons.
Among all optimal assignments the lexicographically smallest one (row 0's
column first, then row 1's...) is returned.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


def _as_int_matrix(cost: Sequence[Sequence]) -> tuple[list[list[int]], int]:
    scale = 1
    for row in cost:
        for x in row:
            scale = math.lcm(scale, Fraction(x).denominator)
    return [[int(Fraction(x) * scale) for x in row] for row in cost], scale


def _hungarian(c: list[list[int]]) -> tuple[list[int], list[int], list[int]]:
    """Shortest augmenting path Hungarian algorithm, O(n^3).

    Returns ``(assign, u, v)`` with ``assign[row] = col`` and dual
    potentials satisfying ``c[i][j] - u[i] - v[j] >= 0`` with equality on
    the assignment.
    """
    n = len(c)
    inf = sum(max(row) for row in c) + 1 if n else 1
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row matched to column j (1-based, 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [inf * 2] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            row = c[i0 - 1]
            ui0 = u[i0]
            delta = None
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - ui0 - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assign = [0] * n
    for j in range(1, n + 1):
        assign[p[j] - 1] = j - 1
    return assign, u[1:], v[1:]


def _lex_smallest(c: list[list[int]], assign: list[int], u: list[int], v: list[int]) -> list[int]:
    """Move to the lexicographically smallest optimal assignment.

    Optimal assignments are exactly the perfect matchings on edges with zero
    reduced cost, so row by row we take the smallest tight column that can
    be reached by rotating an alternating cycle among the not-yet-fixed rows.
    """
    n = len(c)
    assign = list(assign)
    owner = [0] * n
    for r, col in enumerate(assign):
        owner[col] = r

    def tight(r, col):
        return c[r][col] - u[r] - v[col] == 0

    for i in range(n):
        target = assign[i]
        # toward[col] = column that col's owner moves to on the way to freeing target
        toward = {target: None}
        queue = [target]
        while queue:
            x = queue.pop()
            for r in range(i + 1, n):
                col = assign[r]
                if col not in toward and tight(r, x):
                    toward[col] = x
                    queue.append(col)
        best = min(col for col in toward if tight(i, col))
        col = best
        moves = []
        while col != target:
            moves.append((owner[col], toward[col]))
            col = toward[col]
        for r, new in moves:
            assign[r] = new
        assign[i] = best
        for r in range(i, n):
            owner[assign[r]] = r
    return assign


def hungarian_min_perfect_matching(cost: Sequence[Sequence]) -> tuple[list[int], Fraction]:
    """Minimum-cost perfect matching of a square matrix.

    Returns ``(assignment, total)`` where ``assignment[row]`` is the chosen
    column.  Entries may be ints or Fractions and must be non-negative.
    """
    n = len(cost)
    if any(len(row) != n for row in cost):
        raise ValueError("cost matrix must be square")
    if n == 0:
        return [], Fraction(0)
    c, scale = _as_int_matrix(cost)
    if any(x < 0 for row in c for x in row):
        raise ValueError("cost matrix entries must be non-negative")
    assign, u, v = _hungarian(c)
    assign = _lex_smallest(c, assign, u, v)
    total = sum(c[i][assign[i]] for i in range(n))
    return assign, Fraction(total, scale)
