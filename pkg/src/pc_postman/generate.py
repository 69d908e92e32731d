"""Seeded instance generators.

``uniform``        m random arcs, no feasibility guarantee.
``feasible``       2-colored; alternating closed trails through hub vertex 0,
                   then ``duplicates`` random arc copies to create deficits.
                   Every trail leaves the hub in color 1 and returns in
                   color 2, so any arc can switch into any trail at the hub
                   and the instance is PC trail-connected by construction.
``figure-family``  3-colored petal graphs: triangles through a center vertex
                   whose color patterns cycle through three fixed petals.
                   Color-balanced and trail-connected, yet with three petals
                   there is no PC Euler trail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphError
from .graph import ColoredMultiDigraph, build_graph

MODES = ("uniform", "feasible", "figure-family")

# (center->a, a->b, b->center) colors of consecutive petals
PETAL_PATTERNS = ((3, 2, 1), (1, 2, 3), (2, 3, 2))


class ConfigError(GraphError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    mode: str = "uniform"
    n: int = 4
    m: int = 8
    c: int = 2
    weight_range: tuple[int, int] = (1, 10)
    seed: int = 0
    trails: int = 2
    duplicates: int = 0
    petals: int = 3

    def validate(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        lo, hi = self.weight_range
        if lo < 0 or lo > hi:
            raise ConfigError(f"bad weight range {self.weight_range}")
        if self.mode == "feasible" and self.c != 2:
            raise ConfigError("feasible mode requires c = 2")
        if self.mode == "figure-family" and self.c != 3:
            raise ConfigError("figure-family mode requires c = 3")
        if self.mode == "uniform":
            if self.c < 2 or self.n < 2 or self.m < 0:
                raise ConfigError("uniform mode needs c >= 2, n >= 2, m >= 0")
        if self.mode == "feasible":
            base = self.m - self.duplicates
            if self.trails < 2:
                raise ConfigError("feasible mode needs at least 2 trails")
            if self.duplicates < 0 or base < 2 * self.trails or base % 2:
                raise ConfigError("feasible mode needs m - duplicates even and at least "
                                  "2 * trails")
            if self.n < 2 or (self.n < 3 and base > 2 * self.trails):
                raise ConfigError("feasible mode needs n >= 3 for trails longer than 2 arcs")
        if self.mode == "figure-family" and self.petals < 1:
            raise ConfigError("figure-family needs at least one petal")


def generate(config: GeneratorConfig) -> ColoredMultiDigraph:
    """Build an instance; equal configs give identical graphs."""
    config.validate()
    rng = random.Random(config.seed)
    lo, hi = config.weight_range
    if config.mode == "uniform":
        return _uniform(config, rng, lo, hi)
    if config.mode == "feasible":
        return _feasible(config, rng, lo, hi)
    return _petals(config, rng, lo, hi)


def _uniform(cfg: GeneratorConfig, rng: random.Random, lo: int, hi: int) -> ColoredMultiDigraph:
    specs = []
    for _ in range(cfg.m):
        tail = rng.randrange(cfg.n)
        head = rng.randrange(cfg.n - 1)
        head += head >= tail
        specs.append((tail, head, rng.randint(1, cfg.c), rng.randint(lo, hi)))
    return build_graph(cfg.c, cfg.n, specs)


def _feasible(cfg: GeneratorConfig, rng: random.Random, lo: int, hi: int) -> ColoredMultiDigraph:
    lengths = [2] * cfg.trails
    for _ in range((cfg.m - cfg.duplicates - 2 * cfg.trails) // 2):
        lengths[rng.randrange(cfg.trails)] += 2
    specs = []
    for length in lengths:
        prev = 0
        for p in range(length):
            if p == length - 1:
                nxt = 0
            elif prev == 0:
                nxt = rng.randrange(1, cfg.n)
            else:
                # any non-hub vertex other than prev
                nxt = rng.randrange(1, cfg.n - 1)
                nxt += nxt >= prev
            specs.append((prev, nxt, 1 if p % 2 == 0 else 2, rng.randint(lo, hi)))
            prev = nxt
    for _ in range(cfg.duplicates):
        specs.append(specs[rng.randrange(len(specs))])
    rng.shuffle(specs)
    return build_graph(2, cfg.n, specs)


def _petals(cfg: GeneratorConfig, rng: random.Random, lo: int, hi: int) -> ColoredMultiDigraph:
    specs = []
    for k in range(cfg.petals):
        a, b = 2 * k + 1, 2 * k + 2
        c1, c2, c3 = PETAL_PATTERNS[k % 3]
        specs += [(0, a, c1, rng.randint(lo, hi)), (a, b, c2, rng.randint(lo, hi)),
                  (b, 0, c3, rng.randint(lo, hi))]
    return build_graph(3, 2 * cfg.petals + 1, specs)
