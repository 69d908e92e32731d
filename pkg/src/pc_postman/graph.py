"""Weighted arc-colored directed multigraphs.

Vertices are dense integers ``0..n-1``; colors are integers ``1..c``; each
arc is identified by its position in the arc list so parallel arcs stay
distinguishable inside trails and walks.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphError, NotApplicableError, UnsupportedError


def as_weight(value) -> Fraction:
    """Convert ``value`` to an exact non-negative rational weight."""
    if isinstance(value, float):
        value = str(value)
    try:
        w = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GraphError(f"invalid weight {value!r}") from exc
    return w


@dataclass(frozen=True)
class Arc:
    id: int
    tail: int
    head: int
    color: int
    weight: Fraction


class ArcSpec(NamedTuple):
    tail: int
    head: int
    color: int
    weight: object = 1


class ColoredMultiDigraph:
    """Immutable arc-colored directed multigraph.

    ``origin[k]`` names the arc that arc ``k`` is a copy of; it is the
    identity for graphs built from input and points back to the source arc
    for graphs produced by augmentation.
    """

    def __init__(self, color_count: int, vertex_count: int, arcs: Sequence[Arc],
                 origin: Sequence[int] | None = None):
        self.color_count = color_count
        self.vertex_count = vertex_count
        self.arcs: tuple[Arc, ...] = tuple(arcs)
        self.origin: tuple[int, ...] = (
            tuple(range(len(self.arcs))) if origin is None else tuple(origin)
        )
        outs = [[[] for _ in range(color_count + 1)] for _ in range(vertex_count)]
        ins = [[[] for _ in range(color_count + 1)] for _ in range(vertex_count)]
        for a in self.arcs:
            outs[a.tail][a.color].append(a.id)
            ins[a.head][a.color].append(a.id)
        self._out = tuple(tuple(tuple(ids) for ids in per_v) for per_v in outs)
        self._in = tuple(tuple(tuple(ids) for ids in per_v) for per_v in ins)

    # incidence -------------------------------------------------------

    @property
    def colors(self) -> range:
        return range(1, self.color_count + 1)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def __len__(self) -> int:
        return len(self.arcs)

    def out_arcs(self, v: int, color: int | None = None) -> tuple[int, ...]:
        """Outgoing arc ids of ``v`` (of one color if given), ascending."""
        if color is not None:
            return self._out[v][color]
        return tuple(sorted(a for ids in self._out[v] for a in ids))

    def in_arcs(self, v: int, color: int | None = None) -> tuple[int, ...]:
        if color is not None:
            return self._in[v][color]
        return tuple(sorted(a for ids in self._in[v] for a in ids))

    def multiplicity(self, arc_id: int) -> int:
        a = self.arcs[arc_id]
        return sum(1 for b in self._out[a.tail][a.color] if self.arcs[b].head == a.head)

    @cached_property
    def total_weight(self) -> Fraction:
        return sum((a.weight for a in self.arcs), Fraction(0))

    @cached_property
    def scaled_weights(self) -> tuple[tuple[int, ...], int]:
        """Integer weights and the common denominator they were scaled by."""
        scale = 1
        for a in self.arcs:
            scale = math.lcm(scale, a.weight.denominator)
        return tuple(int(a.weight * scale) for a in self.arcs), scale

    def weight_of(self, arc_ids: Iterable[int]) -> Fraction:
        return sum((self.arcs[k].weight for k in arc_ids), Fraction(0))

    def with_arcs(self, specs: Iterable[ArcSpec], origins: Iterable[int]) -> ColoredMultiDigraph:
        """Return a new graph with extra arcs appended after the existing ones."""
        arcs = list(self.arcs)
        origin = list(self.origin)
        for spec, src in zip(specs, origins):
            arcs.append(Arc(len(arcs), spec.tail, spec.head, spec.color, as_weight(spec.weight)))
            origin.append(src)
        return ColoredMultiDigraph(self.color_count, self.vertex_count, arcs, origin)

    def audit(self) -> list[str]:
        """Cross-check incidence indexes against the arc list; return problems."""
        problems = []
        seen = Counter()
        for v in self.vertices:
            for color in self.colors:
                for k in self._out[v][color]:
                    a = self.arcs[k]
                    if a.tail != v or a.color != color:
                        problems.append(f"out-index of vertex {v} color {color} lists arc {k}")
                    seen[("out", k)] += 1
                for k in self._in[v][color]:
                    a = self.arcs[k]
                    if a.head != v or a.color != color:
                        problems.append(f"in-index of vertex {v} color {color} lists arc {k}")
                    seen[("in", k)] += 1
        for a in self.arcs:
            for side in ("out", "in"):
                if seen[(side, a.id)] != 1:
                    problems.append(f"arc {a.id} appears {seen[(side, a.id)]} times in {side}-index")
        return problems

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredMultiDigraph):
            return NotImplemented
        return (self.color_count, self.vertex_count, self.arcs) == (
            other.color_count, other.vertex_count, other.arcs)

    def __hash__(self):
        return hash((self.color_count, self.vertex_count, self.arcs))

    def __repr__(self) -> str:
        return (f"ColoredMultiDigraph(c={self.color_count}, n={self.vertex_count}, "
                f"m={len(self.arcs)})")


def build_graph(color_count: int, vertex_count: int, arc_specs: Iterable) -> ColoredMultiDigraph:
    """Validate ``(tail, head, color, weight)`` tuples and build a graph.

    Arc ids follow input order, starting at 0.
    """
    if color_count < 2:
        raise GraphError(f"color count must be at least 2, got {color_count}")
    if vertex_count < 1:
        raise GraphError(f"vertex count must be at least 1, got {vertex_count}")
    arcs = []
    for idx, spec in enumerate(arc_specs):
        spec = ArcSpec(*spec)
        where = f"arc {idx} {tuple(spec)}"
        for end in (spec.tail, spec.head):
            if not isinstance(end, int) or not 0 <= end < vertex_count:
                raise GraphError(f"{where}: vertex out of range")
        if not isinstance(spec.color, int) or not 1 <= spec.color <= color_count:
            raise GraphError(f"{where}: color out of range")
        if spec.tail == spec.head:
            raise GraphError(f"{where}: self-loop")
        weight = as_weight(spec.weight)
        if weight < 0:
            raise GraphError(f"{where}: negative weight")
        arcs.append(Arc(idx, spec.tail, spec.head, spec.color, weight))
    return ColoredMultiDigraph(color_count, vertex_count, arcs)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-color degree tables, indexed ``[color][vertex]`` (row 0 unused)."""

    out_deg: tuple[tuple[int, ...], ...]
    in_deg: tuple[tuple[int, ...], ...]

    def out(self, v: int, color: int | None = None) -> int:
        if color is None:
            return sum(row[v] for row in self.out_deg)
        return self.out_deg[color][v]

    def in_(self, v: int, color: int | None = None) -> int:
        if color is None:
            return sum(row[v] for row in self.in_deg)
        return self.in_deg[color][v]


def degree_profile(g: ColoredMultiDigraph) -> DegreeProfile:
    out_deg = [[0] * g.vertex_count for _ in range(g.color_count + 1)]
    in_deg = [[0] * g.vertex_count for _ in range(g.color_count + 1)]
    for a in g.arcs:
        out_deg[a.color][a.tail] += 1
        in_deg[a.color][a.head] += 1
    return DegreeProfile(tuple(map(tuple, out_deg)), tuple(map(tuple, in_deg)))


class BalanceReport(NamedTuple):
    balanced: bool
    violations: tuple[tuple[int, int], ...]

    @property
    def witness(self) -> tuple[int, int] | None:
        return self.violations[0] if self.violations else None


def is_color_balanced(g: ColoredMultiDigraph) -> BalanceReport:
    """Check color balance at every vertex.

    With two colors a vertex is balanced when each out-degree in color ``i``
    equals the in-degree in the other color.  With more colors the total in
    and out degrees must agree and no color may exceed, on one side, the
    number of arcs of other colors on the opposite side.

    Violations are ``(vertex, color)`` pairs in vertex-then-color order.
    """
    prof = degree_profile(g)
    bad = []
    for v in g.vertices:
        if g.color_count == 2:
            for i in (1, 2):
                if prof.out(v, i) != prof.in_(v, 3 - i):
                    bad.append((v, i))
            continue
        d_in, d_out = prof.in_(v), prof.out(v)
        for i in g.colors:
            if (d_in != d_out or prof.out(v, i) > d_in - prof.in_(v, i)
                    or prof.in_(v, i) > d_out - prof.out(v, i)):
                bad.append((v, i))
    return BalanceReport(not bad, tuple(bad))


def double_subdivide(g: ColoredMultiDigraph) -> ColoredMultiDigraph:
    """Remove parallel same-colored arcs by replacing copies with 3-arc paths.

    The lowest-id copy in each ``(tail, head, color)`` class is kept; every
    later copy ``x -> y`` of color ``i`` becomes ``x -> u -> u' -> y`` with
    colors ``(i, 3-i, i)`` and weights ``(0, w, 0)`` over two fresh vertices.
    Surviving arcs keep their relative order; ``origin`` maps every new arc
    back to the copy it came from.
    """
    if g.color_count != 2:
        raise UnsupportedError("double subdivision needs exactly 2 colors")
    seen = set()
    arcs: list[Arc] = []
    origin: list[int] = []
    n = g.vertex_count
    zero = Fraction(0)
    for a in g.arcs:
        key = (a.tail, a.head, a.color)
        if key not in seen:
            seen.add(key)
            arcs.append(Arc(len(arcs), a.tail, a.head, a.color, a.weight))
            origin.append(g.origin[a.id])
            continue
        u, u2 = n, n + 1
        n += 2
        path = [(a.tail, u, a.color, zero), (u, u2, 3 - a.color, a.weight),
                (u2, a.head, a.color, zero)]
        for tail, head, color, w in path:
            arcs.append(Arc(len(arcs), tail, head, color, w))
            origin.append(g.origin[a.id])
    return ColoredMultiDigraph(g.color_count, n, arcs, origin)


def _reach(start: int, adj: Sequence[Iterable[int]]) -> set[int]:
    seen = {start}
    todo = deque([start])
    while todo:
        x = todo.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


class LocalCheck(NamedTuple):
    ok: bool
    diagnostic: str


def strong_and_local_check(g: ColoredMultiDigraph) -> LocalCheck:
    """Cheap necessary conditions for PC trail-connectivity.

    (a) the vertices touched by arcs induce a strongly connected digraph;
    (b) every color entering a vertex can leave it in another color and vice
    versa.  Vertices without any incident arc are ignored.
    """
    if len(g.arcs) < 2:
        raise NotApplicableError("needs at least 2 arcs")
    succ = [set() for _ in g.vertices]
    pred = [set() for _ in g.vertices]
    for a in g.arcs:
        succ[a.tail].add(a.head)
        pred[a.head].add(a.tail)
    used = sorted({a.tail for a in g.arcs} | {a.head for a in g.arcs})
    root = used[0]
    fwd, back = _reach(root, succ), _reach(root, pred)
    for v in used:
        if v not in fwd:
            return LocalCheck(False, f"not strongly connected: no path from vertex {root} "
                                     f"to vertex {v}")
        if v not in back:
            return LocalCheck(False, f"not strongly connected: no path from vertex {v} "
                                     f"to vertex {root}")
    prof = degree_profile(g)
    for v in used:
        in_colors = {i for i in g.colors if prof.in_(v, i)}
        out_colors = {i for i in g.colors if prof.out(v, i)}
        for i in sorted(in_colors):
            if not out_colors - {i}:
                return LocalCheck(False, f"vertex {v}: arcs entering in color {i} "
                                         f"cannot leave in another color")
        for i in sorted(out_colors):
            if not in_colors - {i}:
                return LocalCheck(False, f"vertex {v}: arcs leaving in color {i} "
                                         f"cannot be entered in another color")
    return LocalCheck(True, "strongly connected; every color can switch at every vertex")
