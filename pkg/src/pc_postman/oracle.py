"""Exhaustive reference searches for small instances.

These deliberately avoid the arc-adjacency machinery used by the fast
path: they walk the colored multigraph directly, arc by arc.  Size limits
are hard errors so a test can never silently trust a truncated search.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import OracleLimitError
from .graph import ColoredMultiDigraph

CPP_LIMIT = 14
SEARCH_LIMIT = 12


def _limit(g: ColoredMultiDigraph, bound: int, what: str) -> None:
    if len(g.arcs) > bound:
        raise OracleLimitError(f"{what} refuses instances with more than {bound} arcs "
                               f"(got {len(g.arcs)})")


def _out_lists(g: ColoredMultiDigraph) -> list[list[int]]:
    outs = [[] for _ in range(g.vertex_count)]
    for a in g.arcs:
        outs[a.tail].append(a.id)
    return outs


def oracle_cpp(g: ColoredMultiDigraph) -> tuple[Fraction, list[int]] | None:
    """Cheapest PC closed walk covering all arcs, by search over coverage states.

    A state is (vertex, color of last arc, set of covered arcs); costs are
    (weight, steps) pairs so zero-weight arcs cannot stall the search.  One
    least-cost-first search runs per starting arc and the best is kept.
    """
    _limit(g, CPP_LIMIT, "oracle_cpp")
    m = len(g.arcs)
    if m == 0:
        return None
    full = (1 << m) - 1
    outs = _out_lists(g)
    arcs = g.arcs
    weights, scale = g.scaled_weights
    best: tuple[tuple[int, int], list[int]] | None = None
    for first in arcs:
        start = (first.head, first.color, 1 << first.id)
        cost = {start: (weights[first.id], 1)}
        back: dict = {start: None}
        heap = [(weights[first.id], 1, start)]
        while heap:
            w, steps, state = heapq.heappop(heap)
            if cost[state] != (w, steps):
                continue
            if best is not None and (w, steps) >= best[0]:
                break
            v, color, covered = state
            if covered == full and v == first.tail and color != first.color:
                walk = []
                while back[state] is not None:
                    state, k = back[state]
                    walk.append(k)
                walk.append(first.id)
                best = ((w, steps), walk[::-1])
                break
            for k in outs[v]:
                a = arcs[k]
                if a.color == color:
                    continue
                nxt = (a.head, a.color, covered | (1 << k))
                nc = (w + weights[k], steps + 1)
                if nxt not in cost or nc < cost[nxt]:
                    cost[nxt] = nc
                    back[nxt] = (state, k)
                    heapq.heappush(heap, (nc[0], nc[1], nxt))
    if best is None:
        return None
    return Fraction(best[0][0], scale), best[1]


def oracle_euler(g: ColoredMultiDigraph) -> list[int] | None:
    """A closed PC trail through every arc exactly once, by backtracking.

    Any such trail can be rotated to begin with arc 0, so only that start
    is tried.
    """
    _limit(g, SEARCH_LIMIT, "oracle_euler")
    m = len(g.arcs)
    if m == 0:
        return None
    outs = _out_lists(g)
    arcs = g.arcs
    used = [False] * m
    path = [0]
    used[0] = True

    def extend() -> bool:
        last = arcs[path[-1]]
        if len(path) == m:
            return last.head == arcs[0].tail and last.color != arcs[0].color
        for k in outs[last.head]:
            if used[k] or arcs[k].color == last.color:
                continue
            used[k] = True
            path.append(k)
            if extend():
                return True
            path.pop()
            used[k] = False
        return False

    return list(path) if extend() else None


def _all_pc_trails(g: ColoredMultiDigraph, first_arcs):
    """Yield every PC trail (as a list, reused) beginning with one of ``first_arcs``."""
    outs = _out_lists(g)
    arcs = g.arcs
    used = [False] * len(arcs)
    path: list[int] = []

    def grow():
        yield path
        last = arcs[path[-1]]
        for k in outs[last.head]:
            if used[k] or arcs[k].color == last.color:
                continue
            used[k] = True
            path.append(k)
            yield from grow()
            path.pop()
            used[k] = False

    for f in first_arcs:
        used[f] = True
        path.append(f)
        yield from grow()
        path.pop()
        used[f] = False


def oracle_fev_trail(g: ColoredMultiDigraph, s: int, t: int, start_colors=None,
                     end_colors=None) -> tuple[Fraction, list[int]] | None:
    """Cheapest PC trail from ``s`` to ``t`` with constrained end colors.

    Ties are resolved like the fast path: fewer arcs, then smaller arc ids.
    """
    _limit(g, SEARCH_LIMIT, "oracle_fev_trail")
    starts = set(g.colors if start_colors is None else start_colors)
    ends = set(g.colors if end_colors is None else end_colors)
    first = [a.id for a in g.arcs if a.tail == s and a.color in starts]
    best = None
    for path in _all_pc_trails(g, first):
        last = g.arcs[path[-1]]
        if last.head != t or last.color not in ends:
            continue
        key = (g.weight_of(path), len(path), list(path))
        if best is None or key < best:
            best = key
    if best is None:
        return None
    return best[0], best[2]


def oracle_trail_connected(g: ColoredMultiDigraph) -> bool:
    """Every ordered arc pair joined by a PC trail, checked by enumeration."""
    _limit(g, SEARCH_LIMIT, "oracle_trail_connected")
    m = len(g.arcs)
    for f in range(m):
        ends = {path[-1] for path in _all_pc_trails(g, [f])}
        if len(ends) < m:
            return False
    return True
