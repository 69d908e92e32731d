"""Properly colored trails via the arc-adjacency digraph.

Every arc of ``G`` becomes a node; node ``f`` points to node ``g`` when
``f`` ends where ``g`` starts and their colors differ.  Node-simple paths in
that digraph are exactly the PC trails of ``G``, so trail questions turn into
reachability and shortest-path questions.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError, InvariantError, NotApplicableError
from .graph import ColoredMultiDigraph


@dataclass(frozen=True)
class Trail:
    arc_ids: tuple[int, ...]
    weight: Fraction
    start_vertex: int
    end_vertex: int
    start_color: int
    end_color: int

    def __len__(self) -> int:
        return len(self.arc_ids)


def make_trail(g: ColoredMultiDigraph, arc_ids: Sequence[int]) -> Trail:
    ids = tuple(arc_ids)
    first, last = g.arcs[ids[0]], g.arcs[ids[-1]]
    return Trail(ids, g.weight_of(ids), first.tail, last.head, first.color, last.color)


def is_pc_trail(g: ColoredMultiDigraph, arc_ids: Sequence[int]) -> bool:
    """Open-trail check: chained, color-alternating, no repeated arc."""
    if not arc_ids or len(set(arc_ids)) != len(arc_ids):
        return False
    for f, h in zip(arc_ids, arc_ids[1:]):
        a, b = g.arcs[f], g.arcs[h]
        if a.head != b.tail or a.color == b.color:
            return False
    return True


class ArcGraph:
    """Arc-adjacency digraph of ``g``; ``succ[f]``/``pred[f]`` are ascending."""

    def __init__(self, g: ColoredMultiDigraph):
        self.graph = g
        succ = []
        pred = [[] for _ in g.arcs]
        for a in g.arcs:
            nxt = []
            for color in g.colors:
                if color != a.color:
                    nxt.extend(g.out_arcs(a.head, color))
            nxt.sort()
            succ.append(tuple(nxt))
            for b in nxt:
                pred[b].append(a.id)
        self.succ: tuple[tuple[int, ...], ...] = tuple(succ)
        self.pred: tuple[tuple[int, ...], ...] = tuple(tuple(p) for p in pred)

    def __len__(self) -> int:
        return len(self.succ)

    def edges(self) -> list[tuple[int, int]]:
        return [(f, h) for f, nxt in enumerate(self.succ) for h in nxt]

    def reachable(self, f: int) -> set[int]:
        return _bfs(f, self.succ)


def build_arc_graph(g: ColoredMultiDigraph) -> ArcGraph:
    return ArcGraph(g)


def arc_graph_of(g: ColoredMultiDigraph) -> ArcGraph:
    """Build (once) and cache the arc graph on the immutable ``g``."""
    ag = g.__dict__.get("_arc_graph")
    if ag is None:
        ag = g.__dict__["_arc_graph"] = ArcGraph(g)
    return ag


def _bfs(start: int, adj: Sequence[Iterable[int]]) -> set[int]:
    seen = {start}
    todo = deque([start])
    while todo:
        x = todo.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


class SplitGraph:
    """Edge-weighted form of the node-weighted arc graph.

    Arc node ``f`` is split into an entry node ``2f`` and an exit node
    ``2f+1`` joined by an edge carrying the arc's weight (and one hop); every
    arc-graph edge ``f -> h`` becomes a free edge ``2f+1 -> 2h``.  Weights are
    the graph's integer-scaled weights so comparisons stay exact.
    """

    def __init__(self, arc_graph: ArcGraph):
        weights, self.scale = arc_graph.graph.scaled_weights
        self.node_count = 2 * len(arc_graph)
        adj: list[tuple[tuple[int, int, int], ...]] = []
        for f, nxt in enumerate(arc_graph.succ):
            adj.append(((2 * f + 1, weights[f], 1),))
            adj.append(tuple((2 * h, 0, 0) for h in nxt))
        self.adj = adj


def split_graph_of(g: ColoredMultiDigraph) -> SplitGraph:
    sg = g.__dict__.get("_split_graph")
    if sg is None:
        sg = g.__dict__["_split_graph"] = SplitGraph(arc_graph_of(g))
    return sg


def _allowed(colors, g: ColoredMultiDigraph) -> tuple[int, ...]:
    if colors is None:
        return tuple(g.colors)
    colors = tuple(sorted(set(colors)))
    if not colors or any(not 1 <= c <= g.color_count for c in colors):
        raise GraphError(f"color set {colors} is empty or out of range")
    return colors


class FevSearch:
    """Single-source shortest PC trails from vertex ``s``.

    Runs Dijkstra on the split graph from a virtual source joined to the
    entry nodes of ``s``'s out-arcs in ``start_colors``.  Path cost is the
    pair (weight, arc count) packed into one integer, so ties fall to the
    trail with fewer arcs.  Any number of end vertices / end-color sets can
    then be queried without another search.
    """

    def __init__(self, g: ColoredMultiDigraph, s: int, start_colors=None):
        if not 0 <= s < g.vertex_count:
            raise GraphError(f"vertex {s} out of range")
        self.graph = g
        self.source = s
        self.start_colors = _allowed(start_colors, g)
        sg = split_graph_of(g)
        self._scale = sg.scale
        self._radix = len(g.arcs) + 1
        radix = self._radix
        dist: list[int | None] = [None] * sg.node_count
        heap = []
        for color in self.start_colors:
            for f in g.out_arcs(s, color):
                dist[2 * f] = 0
                heap.append((0, 2 * f))
        heapq.heapify(heap)
        adj = sg.adj
        while heap:
            d, x = heapq.heappop(heap)
            if d != dist[x]:
                continue
            for y, w, hops in adj[x]:
                nd = d + w * radix + hops
                old = dist[y]
                if old is None or nd < old:
                    dist[y] = nd
                    heapq.heappush(heap, (nd, y))
        self._dist = dist

    def _finals(self, t: int, end_colors) -> tuple[int | None, list[int]]:
        g = self.graph
        best = None
        finals = []
        for color in _allowed(end_colors, g):
            for f in g.in_arcs(t, color):
                d = self._dist[2 * f + 1]
                if d is None:
                    continue
                if best is None or d < best:
                    best, finals = d, [f]
                elif d == best:
                    finals.append(f)
        return best, finals

    def cost(self, t: int, end_colors=None) -> Fraction | None:
        """Minimum trail weight to ``t`` ending in ``end_colors``, or None."""
        best, _ = self._finals(t, end_colors)
        if best is None:
            return None
        return Fraction(best // self._radix, self._scale)

    def trail(self, t: int, end_colors=None) -> Trail | None:
        """The optimal trail to ``t``; ties go to the lexicographically smallest ids."""
        best, finals = self._finals(t, end_colors)
        if best is None:
            return None
        dist = self._dist
        ag = arc_graph_of(self.graph)
        # arcs lying on some optimal path: walk tight edges backwards from the finals
        good = set(finals)
        todo = deque(finals)
        while todo:
            h = todo.popleft()
            for f in ag.pred[h]:
                if f not in good and dist[2 * f + 1] == dist[2 * h]:
                    good.add(f)
                    todo.append(f)
        finals_set = set(finals)
        cur = min(f for f in good if dist[2 * f] == 0 and self.graph.arcs[f].tail == self.source
                  and self.graph.arcs[f].color in self.start_colors)
        path = [cur]
        while cur not in finals_set:
            exit_d = dist[2 * cur + 1]
            cur = next(h for h in ag.succ[cur] if h in good and dist[2 * h] == exit_d)
            path.append(cur)
        return make_trail(self.graph, path)


def min_weight_pc_fev_trail(g: ColoredMultiDigraph, s: int, t: int,
                            start_colors=None, end_colors=None) -> Trail | None:
    """Minimum-weight PC trail from ``s`` to ``t`` with constrained end colors.

    ``s == t`` is allowed and the first/last colors of such a trail may
    coincide.  Returns None when no such trail exists.
    """
    if not 0 <= t < g.vertex_count:
        raise GraphError(f"vertex {t} out of range")
    return FevSearch(g, s, start_colors).trail(t, end_colors)


def _check_arc(g: ColoredMultiDigraph, f: int) -> None:
    if not isinstance(f, int) or not 0 <= f < len(g.arcs):
        raise GraphError(f"arc id {f!r} out of range")


def pc_trail_exists(g: ColoredMultiDigraph, f1: int, f2: int) -> bool:
    """Is there a PC trail whose first arc is ``f1`` and last arc is ``f2``?"""
    _check_arc(g, f1)
    _check_arc(g, f2)
    if f1 == f2:
        return True
    return f2 in arc_graph_of(g).reachable(f1)


class TrailConnectivity(NamedTuple):
    connected: bool
    witness: tuple[int, int] | None


def is_pc_trail_connected(g: ColoredMultiDigraph) -> TrailConnectivity:
    """Every ordered arc pair joined by a PC trail?

    Decided by checking that the arc graph is strongly connected (forward
    and backward search from arc 0).  On failure the first arc, by id, that
    misses some other arc is reported with the smallest arc it cannot reach.
    """
    m = len(g.arcs)
    if m == 0:
        raise NotApplicableError("needs at least 1 arc")
    ag = arc_graph_of(g)
    if len(_bfs(0, ag.succ)) == m and len(_bfs(0, ag.pred)) == m:
        return TrailConnectivity(True, None)
    for f1 in range(m):
        reach = ag.reachable(f1)
        if len(reach) < m:
            f2 = next(h for h in range(m) if h not in reach)
            return TrailConnectivity(False, (f1, f2))
    raise InvariantError("arc graph not strongly connected yet every arc reaches all")
