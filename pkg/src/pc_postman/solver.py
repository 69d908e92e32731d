"""Chinese Postman on arc-colored digraphs.

Feasibility is decided for any number of colors.  For two colors the
optimal covering PC closed walk is found by pairing color deficits with
minimum-weight PC trails (a min-cost perfect matching), adding those trails
as arc copies, and taking a PC Euler trail of the result.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import InvariantError, NotApplicableError, UnsupportedError
from .euler import ClosedWalk, pc_euler_trail, verify_closed_pc_walk
from .graph import (ArcSpec, ColoredMultiDigraph, LocalCheck, degree_profile,
                    is_color_balanced, strong_and_local_check)
from .matching import hungarian_min_perfect_matching
from .trails import FevSearch, Trail, is_pc_trail_connected

log = logging.getLogger(__name__)


class FeasibilityReport(NamedTuple):
    feasible: bool
    trail_connected: bool
    witness: tuple[int, int] | None
    local: LocalCheck | None


def check_feasible(g: ColoredMultiDigraph) -> FeasibilityReport:
    """Does some PC closed walk cover every arc?  Works for any color count.

    A graph with two or more arcs is feasible exactly when it is PC
    trail-connected.  A single arc can never be closed up, so it is reported
    infeasible even though it is trivially trail-connected.
    """
    if not g.arcs:
        raise NotApplicableError("graph has no arcs")
    tc = is_pc_trail_connected(g)
    local = strong_and_local_check(g) if len(g.arcs) >= 2 else None
    return FeasibilityReport(tc.connected and len(g.arcs) >= 2, tc.connected, tc.witness, local)


@dataclass(frozen=True)
class DeficitTable:
    """``theta_plus[i][v]``: color-``i`` out-arc copies ``v`` still needs.

    ``theta_minus[i][v]`` likewise counts missing color-``i`` in-arcs.
    Indexed by color 1 or 2 (index 0 unused).
    """

    theta_plus: tuple[tuple[int, ...], ...]
    theta_minus: tuple[tuple[int, ...], ...]

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.theta_plus + self.theta_minus)


def compute_deficits(g: ColoredMultiDigraph) -> DeficitTable:
    if g.color_count != 2:
        raise UnsupportedError("deficits are only defined for 2 colors")
    prof = degree_profile(g)
    plus = [()] * 3
    minus = [()] * 3
    for i in (1, 2):
        plus[i] = tuple(max(0, prof.in_(v, 3 - i) - prof.out(v, i)) for v in g.vertices)
        minus[i] = tuple(max(0, prof.out(v, 3 - i) - prof.in_(v, i)) for v in g.vertices)
    return DeficitTable(tuple(plus), tuple(minus))


@dataclass
class MatchingInstance:
    """Deficit slots and the cost of serving each (row, column) pair.

    ``rows`` holds one ``(vertex, color)`` slot per missing out-arc copy,
    ``cols`` one per missing in-arc copy.  Slot costs depend only on the
    class pair, so costs are kept per class and trails are recovered lazily.
    """

    graph: ColoredMultiDigraph
    rows: list[tuple[int, int]]
    cols: list[tuple[int, int]]
    class_cost: dict[tuple[int, int, int, int], Fraction]
    searches: dict[tuple[int, int], FevSearch]
    trail_cache: dict[tuple[int, int, int, int], Trail] = field(default_factory=dict)

    @property
    def cost(self) -> list[list[Fraction]]:
        return [[self.class_cost[r + c] for c in self.cols] for r in self.rows]

    def trail(self, u: int, i: int, v: int, j: int) -> Trail:
        key = (u, i, v, j)
        if key not in self.trail_cache:
            self.trail_cache[key] = self.searches[(u, i)].trail(v, (j,))
        return self.trail_cache[key]


def build_matching_instance(g: ColoredMultiDigraph, deficits: DeficitTable | None = None,
                            threads: int = 1) -> MatchingInstance:
    """Expand deficits into slots and price every class pair.

    One shortest-trail search runs per row class; with ``threads > 1`` the
    searches are spread over a thread pool (results do not depend on it).
    """
    if g.color_count != 2:
        raise UnsupportedError("matching instance needs 2 colors")
    if deficits is None:
        deficits = compute_deficits(g)
    rows = [(v, i) for v in g.vertices for i in (1, 2)
            for _ in range(deficits.theta_plus[i][v])]
    cols = [(v, j) for v in g.vertices for j in (1, 2)
            for _ in range(deficits.theta_minus[j][v])]
    if len(rows) != len(cols):
        raise InvariantError(f"slot counts differ: {len(rows)} out-slots, {len(cols)} in-slots")
    row_classes = sorted(set(rows))
    col_classes = sorted(set(cols))
    if threads > 1 and len(row_classes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(lambda key: FevSearch(g, key[0], (key[1],)), row_classes))
    else:
        found = [FevSearch(g, u, (i,)) for u, i in row_classes]
    searches = dict(zip(row_classes, found))
    class_cost = {}
    for (u, i), search in searches.items():
        for v, j in col_classes:
            w = search.cost(v, (j,))
            if w is None:
                raise InvariantError(f"no PC trail from vertex {u} (color {i}) to vertex {v} "
                                     f"(color {j}) in a trail-connected graph")
            class_cost[(u, i, v, j)] = w
    return MatchingInstance(g, rows, cols, class_cost, searches)


def augment(g: ColoredMultiDigraph, inst: MatchingInstance,
            assignment: list[int]) -> ColoredMultiDigraph:
    """Add one copy of every arc on the trail chosen for each matched slot pair.

    The copies are appended after the arcs of ``g`` and their ``origin``
    entries name the arc of ``g`` they duplicate.
    """
    specs, origins = [], []
    for r, c in enumerate(assignment):
        u, i = inst.rows[r]
        v, j = inst.cols[c]
        for k in inst.trail(u, i, v, j).arc_ids:
            a = g.arcs[k]
            specs.append(ArcSpec(a.tail, a.head, a.color, a.weight))
            origins.append(k)
    if not specs:
        return g
    return g.with_arcs(specs, origins)


@dataclass(frozen=True)
class Solution:
    walk: ClosedWalk
    total_weight: Fraction
    duplicated: Counter
    matching_cost: Fraction


def solve(g: ColoredMultiDigraph, threads: int = 1, check_steps: bool = False) -> Solution | None:
    """Minimum-weight PC closed walk covering every arc, or None if none exists."""
    if g.color_count != 2:
        raise UnsupportedError("optimal solving is only available for 2 colors")
    if not check_feasible(g).feasible:
        return None
    deficits = compute_deficits(g)
    if deficits.is_zero():
        augmented, cost = g, Fraction(0)
    else:
        inst = build_matching_instance(g, deficits, threads=threads)
        assignment, cost = hungarian_min_perfect_matching(inst.cost)
        log.debug("matched %d deficit slots at cost %s", len(assignment), cost)
        augmented = augment(g, inst, assignment)
        if not is_color_balanced(augmented).balanced:
            raise InvariantError("augmented graph is not color-balanced")
    euler = pc_euler_trail(augmented, check_steps=check_steps)
    if euler is None:
        raise InvariantError("augmented graph has no PC Euler trail")
    m = len(g.arcs)
    ids = tuple(k if k < m else augmented.origin[k] for k in euler.arc_ids)
    walk = ClosedWalk(ids, g.weight_of(ids))
    total = g.total_weight + cost
    if walk.weight != total:
        raise InvariantError(f"walk weight {walk.weight} differs from bound {total}")
    report = verify_closed_pc_walk(g, ids, require_cover_all=True)
    if not report.valid:
        raise InvariantError(f"solver produced an invalid walk: {report.first}")
    duplicated = Counter(augmented.origin[k] for k in range(m, len(augmented.arcs)))
    return Solution(walk, total, duplicated, cost)
