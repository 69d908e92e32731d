import pytest

from helpers import FIG1
from pc_postman.generate import ConfigError, GeneratorConfig, generate
from pc_postman.graph import is_color_balanced
from pc_postman.solver import check_feasible, solve


@pytest.mark.parametrize("mode, extra", [("uniform", {}), ("feasible", {"duplicates": 3}),
                                         ("figure-family", {"c": 3, "petals": 4})])
def test_same_seed_same_graph(mode, extra):
    cfg = GeneratorConfig(mode=mode, n=6, m=13, seed=42, **extra)
    assert generate(cfg) == generate(cfg)
    assert generate(cfg) != generate(GeneratorConfig(mode=mode, n=6, m=13, seed=43, **extra))


def test_uniform_shape():
    g = generate(GeneratorConfig(n=5, m=30, c=3, weight_range=(2, 4), seed=1))
    assert len(g.arcs) == 30 and g.color_count == 3
    assert all(2 <= a.weight <= 4 for a in g.arcs)
    assert all(a.tail != a.head for a in g.arcs)


@pytest.mark.parametrize("seed", range(25))
def test_feasible_mode_is_feasible(seed):
    dup = seed % 4
    cfg = GeneratorConfig(mode="feasible", n=5, m=12 + dup, trails=3, duplicates=dup, seed=seed)
    g = generate(cfg)
    assert len(g.arcs) == 12 + dup
    assert check_feasible(g).feasible
    if cfg.duplicates == 0:
        assert is_color_balanced(g).balanced
    assert solve(g) is not None


def test_feasible_mode_handles_two_vertices():
    g = generate(GeneratorConfig(mode="feasible", n=2, m=4, trails=2))
    assert check_feasible(g).feasible


def test_figure_family():
    assert generate(GeneratorConfig(mode="figure-family", c=3, weight_range=(1, 1))) == FIG1
    g = generate(GeneratorConfig(mode="figure-family", c=3, petals=5, seed=3))
    assert len(g.arcs) == 15 and is_color_balanced(g).balanced
    assert check_feasible(g).feasible


@pytest.mark.parametrize("cfg", [
    GeneratorConfig(mode="nope"),
    GeneratorConfig(weight_range=(5, 1)),
    GeneratorConfig(weight_range=(-1, 1)),
    GeneratorConfig(mode="feasible", c=3),
    GeneratorConfig(mode="feasible", m=7),
    GeneratorConfig(mode="feasible", m=8, trails=1),
    GeneratorConfig(mode="feasible", n=2, m=8, trails=2),
    GeneratorConfig(mode="figure-family", c=2),
    GeneratorConfig(mode="figure-family", c=3, petals=0),
    GeneratorConfig(n=1),
])
def test_invalid_configs(cfg):
    with pytest.raises(ConfigError):
        generate(cfg)
