"""PC Euler trails of 2-arc-colored multigraphs.

A color-balanced 2-colored multigraph splits into PC circuits (closed PC
trails using at most one out-arc per color at each vertex).  When the graph
is also PC trail-connected, circuits that share a vertex with two same-color
out-arcs can be spliced into one another, which yields a PC Euler trail.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvariantError, NotApplicableError, UnsupportedError
from .graph import ColoredMultiDigraph, is_color_balanced
from .trails import is_pc_trail_connected


@dataclass(frozen=True)
class ClosedWalk:
    arc_ids: tuple[int, ...]
    weight: Fraction

    def __len__(self) -> int:
        return len(self.arc_ids)


@dataclass(frozen=True)
class Circuit:
    """Cyclic arc sequence; ``arc_ids[0]`` leaves the vertex where it was closed."""

    arc_ids: tuple[int, ...]

    def visits(self, g: ColoredMultiDigraph) -> list[tuple[int, int, int]]:
        """``(vertex, incoming arc, outgoing arc)`` for each vertex occurrence."""
        ids = self.arc_ids
        return [(g.arcs[ids[p]].tail, ids[p - 1], ids[p]) for p in range(len(ids))]

    def rotated(self, start: int) -> Circuit:
        return Circuit(self.arc_ids[start:] + self.arc_ids[:start])


@dataclass
class CircuitDecomposition:
    circuits: list[Circuit]
    circuit_of: list[int]
    # (i, j) with i < j -> (good vertex, shared out-color); None until built
    circuit_graph: dict[tuple[int, int], tuple[int, int]] | None = field(default=None)

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.circuits]
        for i, j in self.circuit_graph or {}:
            adj[i].append(j)
            adj[j].append(i)
        for lst in adj:
            lst.sort()
        return adj


def _require_two_colors(g: ColoredMultiDigraph, what: str) -> None:
    if g.color_count != 2:
        raise UnsupportedError(f"{what} is only defined for 2 colors, got {g.color_count}")


def circuit_problems(g: ColoredMultiDigraph, arc_ids: Sequence[int]) -> list[str]:
    """Violations of the PC circuit invariants (empty list when fine)."""
    problems = []
    if not arc_ids:
        return ["empty circuit"]
    if len(set(arc_ids)) != len(arc_ids):
        problems.append("repeated arc")
    for p in range(len(arc_ids)):
        a, b = g.arcs[arc_ids[p - 1]], g.arcs[arc_ids[p]]
        if a.head != b.tail:
            problems.append(f"break before position {p}")
        if a.color == b.color:
            problems.append(f"color repeat at position {p}")
    seen = set()
    for k in arc_ids:
        key = (g.arcs[k].tail, g.arcs[k].color)
        if key in seen:
            problems.append(f"vertex {key[0]} has two out-arcs of color {key[1]}")
        seen.add(key)
    return problems


def decompose_into_circuits(g: ColoredMultiDigraph) -> CircuitDecomposition:
    """Partition the arcs of a color-balanced 2-colored graph into PC circuits.

    A PC trail is grown greedily (lowest usable arc id first).  Whenever the
    newly appended arc ``xy`` enters a vertex ``y`` that already leaves the
    trail in the other color, the part of the trail from that out-arc up to
    ``xy`` is closed off as a circuit and growth resumes from ``y``.
    """
    _require_two_colors(g, "circuit decomposition")
    report = is_color_balanced(g)
    if not report.balanced:
        raise NotApplicableError(f"graph is not color-balanced (vertex {report.witness[0]}, "
                                 f"color {report.witness[1]})")
    m = len(g.arcs)
    used = [False] * m
    # next candidate index into g.out_arcs(v, color); used arcs never come back
    cursor = defaultdict(int)
    circuits: list[Circuit] = []
    circuit_of = [-1] * m
    trail: list[int] = []
    leaves: dict[int, dict[int, int]] = defaultdict(dict)  # vertex -> color -> index in trail
    seed = 0

    def take(v: int, color: int) -> int | None:
        arcs = g.out_arcs(v, color)
        pos = cursor[(v, color)]
        while pos < len(arcs) and used[arcs[pos]]:
            pos += 1
        cursor[(v, color)] = pos
        return arcs[pos] if pos < len(arcs) else None

    while True:
        if not trail:
            while seed < m and used[seed]:
                seed += 1
            if seed == m:
                break
            used[seed] = True
            trail.append(seed)
            leaves[g.arcs[seed].tail][g.arcs[seed].color] = 0
        last = g.arcs[trail[-1]]
        e = take(last.head, 3 - last.color)
        if e is None:
            raise InvariantError(f"circuit growth stalled at vertex {last.head}")
        used[e] = True
        arc = g.arcs[e]
        start = leaves[arc.head].get(3 - arc.color)
        if start is None:
            if arc.color in leaves[arc.tail]:
                raise InvariantError(f"vertex {arc.tail} left twice in color {arc.color}")
            leaves[arc.tail][arc.color] = len(trail)
            trail.append(e)
            continue
        ids = tuple(trail[start:]) + (e,)
        del trail[start:]
        for k in ids[:-1]:
            del leaves[g.arcs[k].tail][g.arcs[k].color]
        for k in ids:
            circuit_of[k] = len(circuits)
        circuits.append(Circuit(ids))
    return CircuitDecomposition(circuits, circuit_of)


def build_circuit_graph(g: ColoredMultiDigraph, dec: CircuitDecomposition) -> CircuitDecomposition:
    """Join circuits that share a good vertex.

    Two circuits are joined when at some common vertex both leave in the same
    color.  Each edge keeps the lowest such vertex, then the lowest color.
    """
    through: dict[tuple[int, int], list[int]] = defaultdict(list)
    for ci, circ in enumerate(dec.circuits):
        for k in circ.arc_ids:
            through[(g.arcs[k].tail, g.arcs[k].color)].append(ci)
    edges: dict[tuple[int, int], tuple[int, int]] = {}
    for (v, color) in sorted(through):
        members = sorted(through[(v, color)])
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.setdefault((members[a], members[b]), (v, color))
    dec.circuit_graph = edges
    return dec


def _dfs_tree_edges(adj: list[list[int]]) -> tuple[list[tuple[int, int]], int]:
    """Tree edges (parent, child) of a DFS from node 0, in discovery order."""
    if not adj:
        return [], 0
    visited = [False] * len(adj)
    visited[0] = True
    count = 1
    tree = []
    stack = [(0, iter(adj[0]))]
    while stack:
        node, it = stack[-1]
        for nb in it:
            if not visited[nb]:
                visited[nb] = True
                count += 1
                tree.append((node, nb))
                stack.append((nb, iter(adj[nb])))
                break
        else:
            stack.pop()
    return tree, count


def stitch_circuits(g: ColoredMultiDigraph, dec: CircuitDecomposition,
                    check_steps: bool = False) -> list[int]:
    """Splice all circuits into one PC Euler trail along a DFS tree.

    With ``check_steps`` the partial trail is re-verified after every splice.
    """
    if dec.circuit_graph is None:
        build_circuit_graph(g, dec)
    tree, count = _dfs_tree_edges(dec.neighbours())
    if count != len(dec.circuits):
        raise InvariantError("circuit graph is disconnected although the graph is "
                             "PC trail-connected")
    # per circuit: (vertex, color) -> arc entering / index of arc leaving
    enter = [{} for _ in dec.circuits]
    leave = [{} for _ in dec.circuits]
    for ci, circ in enumerate(dec.circuits):
        for p, k in enumerate(circ.arc_ids):
            a = g.arcs[k]
            enter[ci][(a.head, a.color)] = k
            leave[ci][(a.tail, a.color)] = p
    first = dec.circuits[0].arc_ids
    nxt: dict[int, int | None] = {k: first[p + 1] if p + 1 < len(first) else None
                                  for p, k in enumerate(first)}
    head = first[0]
    for parent, child in tree:
        y, color = dec.circuit_graph[(min(parent, child), max(parent, child))]
        xy = enter[parent][(y, 3 - color)]
        piece = dec.circuits[child].rotated(leave[child][(y, color)]).arc_ids
        after = nxt[xy]
        nxt[xy] = piece[0]
        for a, b in zip(piece, piece[1:]):
            nxt[a] = b
        nxt[piece[-1]] = after
        if check_steps:
            partial = _unroll(head, nxt)
            report = verify_closed_pc_walk(g, partial, require_cover_all=False,
                                           require_trail=True)
            if not report.valid:
                raise InvariantError(f"splice broke the trail: {report.violations[0]}")
    return _unroll(head, nxt)


def _unroll(head: int, nxt: dict[int, int | None]) -> list[int]:
    out = []
    cur: int | None = head
    while cur is not None:
        out.append(cur)
        cur = nxt[cur]
    return out


def pc_euler_trail(g: ColoredMultiDigraph, check_steps: bool = False) -> ClosedWalk | None:
    """A PC Euler trail of ``g``, or None when ``g`` has none.

    ``g`` has one exactly when it is color-balanced and PC trail-connected.
    """
    _require_two_colors(g, "PC Euler trail construction")
    if not g.arcs:
        raise NotApplicableError("graph has no arcs")
    if not is_color_balanced(g).balanced or not is_pc_trail_connected(g).connected:
        return None
    dec = build_circuit_graph(g, decompose_into_circuits(g))
    ids = stitch_circuits(g, dec, check_steps=check_steps)
    return ClosedWalk(tuple(ids), g.weight_of(ids))


def is_bad_circuit(g: ColoredMultiDigraph, circuit: Sequence[int]) -> list[int] | None:
    """A component of ``g`` minus the circuit that it cannot switch into.

    Components are taken in the underlying undirected graph and scanned by
    lowest arc id.  A component is a witness when, at every vertex it shares
    with the circuit, no color leaves twice across the two.  Returns the
    witness's sorted arc ids, or None when the circuit is good.
    """
    in_circuit = set(circuit)
    parent = list(g.vertices)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rest = [a for a in g.arcs if a.id not in in_circuit]
    for a in rest:
        ra, rb = find(a.tail), find(a.head)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    components: dict[int, list[int]] = defaultdict(list)
    for a in rest:
        components[find(a.tail)].append(a.id)
    circuit_vertices = {g.arcs[k].tail for k in circuit}
    for comp in sorted(components.values()):
        out_count: dict[tuple[int, int], int] = defaultdict(int)
        for k in list(circuit) + comp:
            out_count[(g.arcs[k].tail, g.arcs[k].color)] += 1
        comp_vertices = {g.arcs[k].tail for k in comp} | {g.arcs[k].head for k in comp}
        shared = circuit_vertices & comp_vertices
        if all(max(out_count[(v, 1)], out_count[(v, 2)]) == 1 for v in shared):
            return sorted(comp)
    return None


class WalkReport(NamedTuple):
    valid: bool
    violations: tuple[str, ...]
    weight: Fraction | None

    @property
    def first(self) -> str | None:
        return self.violations[0] if self.violations else None


def verify_closed_pc_walk(g: ColoredMultiDigraph, walk: Sequence[int],
                          require_cover_all: bool = True, require_trail: bool = False,
                          claimed_weight=None) -> WalkReport:
    """Check a closed PC walk given as arc ids; positions in messages are 0-based."""
    walk = list(walk)
    bad = []
    if not walk:
        bad.append("empty walk")
    unknown = [p for p, k in enumerate(walk)
               if not isinstance(k, int) or not 0 <= k < len(g.arcs)]
    if unknown:
        bad.append(f"unknown arc id {walk[unknown[0]]!r} at position {unknown[0]}")
        return WalkReport(False, tuple(bad), None)
    arcs = [g.arcs[k] for k in walk]
    for p in range(1, len(arcs)):
        a, b = arcs[p - 1], arcs[p]
        if a.head != b.tail:
            bad.append(f"break at position {p}: arc {a.id} ends at {a.head}, "
                       f"arc {b.id} starts at {b.tail}")
        if a.color == b.color:
            bad.append(f"color repeat at position {p}")
    if arcs:
        if arcs[-1].head != arcs[0].tail:
            bad.append(f"not closed: ends at {arcs[-1].head}, starts at {arcs[0].tail}")
        elif len(arcs) > 1 and arcs[-1].color == arcs[0].color:
            bad.append("color repeat at wrap-around")
    if require_trail:
        seen = set()
        for p, k in enumerate(walk):
            if k in seen:
                bad.append(f"arc {k} repeated at position {p}")
            seen.add(k)
    if require_cover_all:
        missing = sorted(set(range(len(g.arcs))) - set(walk))
        if missing:
            bad.append(f"arcs not covered: {missing}")
    weight = g.weight_of(walk)
    if claimed_weight is not None and Fraction(claimed_weight) != weight:
        bad.append(f"claimed weight {claimed_weight} but arcs sum to {weight}")
    return WalkReport(not bad, tuple(bad), weight)
