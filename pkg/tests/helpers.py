"""Named fixture graphs and seeded small-instance families shared by the tests."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from pc_postman.graph import ColoredMultiDigraph, build_graph

FIXTURES = Path(__file__).parent / "fixtures"

# vertices: v=0, w=1
CYC2 = build_graph(2, 2, [(0, 1, 1, 1), (1, 0, 2, 2)])

# vertices: v=0, x1=1, x2=2; arcs a1..a5 are ids 0..4
V, X1, X2 = 0, 1, 2
A1, A2, A3, A4, A5 = range(5)
HUB5_SPECS = [(V, X1, 1, 1), (X1, V, 2, 1), (V, X2, 1, 1), (X2, V, 2, 1), (V, X1, 1, 1)]
HUB5 = build_graph(2, 3, HUB5_SPECS)
# HUB5 plus a second copy of a2 (id 5): balanced
HUB5_PLUS = build_graph(2, 3, HUB5_SPECS + [(X1, V, 2, 1)])

SAME2 = build_graph(2, 2, [(0, 1, 1, 1), (1, 0, 1, 1)])

# vertices a=0, b=1; arcs e1..e4 are ids 0..3
FAIL4 = build_graph(2, 2, [(0, 1, 1, 1), (1, 0, 2, 1), (0, 1, 2, 1), (1, 0, 1, 1)])

# center v=0, petals (v,u1,u2), (v,u3,u4), (v,u5,u6); solid=1, dashed=2, dotted=3
FIG1 = build_graph(3, 7, [
    (0, 1, 3, 1), (1, 2, 2, 1), (2, 0, 1, 1),
    (0, 3, 1, 1), (3, 4, 2, 1), (4, 0, 3, 1),
    (0, 5, 2, 1), (5, 6, 3, 1), (6, 0, 2, 1),
])


def random_uniform(rng: random.Random, n: int, m: int, c: int = 2,
                   wmax: int = 1) -> ColoredMultiDigraph:
    specs = []
    for _ in range(m):
        tail, head = rng.sample(range(n), 2)
        specs.append((tail, head, rng.randint(1, c), rng.randint(1, wmax)))
    return build_graph(c, n, specs)


def _closed_alternating(rng: random.Random, n: int, length: int):
    while True:
        seq = [rng.randrange(n) for _ in range(length)]
        if all(seq[i] != seq[(i + 1) % length] for i in range(length)):
            break
    first = rng.randint(1, 2)
    return [(seq[i], seq[(i + 1) % length], first if i % 2 == 0 else 3 - first)
            for i in range(length)]


def random_balanced(rng: random.Random, n: int, m: int, wmax: int = 1) -> ColoredMultiDigraph:
    """Union of random alternating closed walks; color-balanced by construction."""
    specs = []
    while len(specs) < m - 1:
        length = 2 * rng.randint(1, (m - len(specs)) // 2)
        specs += _closed_alternating(rng, n, length)
    rng.shuffle(specs)
    return build_graph(2, n, [s + (rng.randint(1, wmax),) for s in specs])


def random_perturbed(rng: random.Random, n: int, m: int, wmax: int = 1) -> ColoredMultiDigraph:
    """A balanced graph with a couple of arcs dropped or copied (usually unbalanced)."""
    g = random_balanced(rng, n, max(2, m - 1), wmax)
    specs = [(a.tail, a.head, a.color, a.weight) for a in g.arcs]
    for _ in range(rng.randint(1, 2)):
        if rng.random() < 0.5 and len(specs) > 2:
            specs.pop(rng.randrange(len(specs)))
        elif len(specs) < m:
            specs.append(specs[rng.randrange(len(specs))])
    return build_graph(2, n, specs)


def random_small(rng: random.Random, n_max: int = 4, m_max: int = 8, m_min: int = 1,
                 wmax: int = 1) -> ColoredMultiDigraph:
    """One instance from a mix of uniform, balanced and perturbed families."""
    n = rng.randint(2, n_max)
    m = rng.randint(max(m_min, 2), m_max) if m_min >= 2 else rng.randint(m_min, m_max)
    kind = rng.random()
    if kind < 0.4 or m < 2:
        return random_uniform(rng, n, m, wmax=wmax)
    if kind < 0.7:
        return random_balanced(rng, n, m, wmax)
    return random_perturbed(rng, n, m, wmax)


def all_multigraphs(n: int, max_arcs: int):
    """Every 2-colored multigraph on n labelled vertices with 1..max_arcs arcs, weight 1.

    Multigraphs are multisets of (tail, head, color) triples listed in
    canonical order, so each is produced exactly once.
    """
    kinds = [(t, h, c) for t in range(n) for h in range(n) if t != h for c in (1, 2)]
    for m in range(1, max_arcs + 1):
        for combo in itertools.combinations_with_replacement(kinds, m):
            yield build_graph(2, n, [k + (1,) for k in combo])
