"""Sanity checks of the exhaustive searches against hand-worked answers."""

import pytest

from helpers import CYC2, FAIL4, FIG1, HUB5, HUB5_PLUS, SAME2, V, X1
from pc_postman.errors import OracleLimitError
from pc_postman.euler import verify_closed_pc_walk
from pc_postman.graph import build_graph
from pc_postman.oracle import (CPP_LIMIT, SEARCH_LIMIT, oracle_cpp, oracle_euler,
                               oracle_fev_trail, oracle_trail_connected)


def test_oracle_cpp_fixtures():
    assert oracle_cpp(CYC2) == (3, [0, 1])
    w, walk = oracle_cpp(HUB5)
    assert w == 6
    assert verify_closed_pc_walk(HUB5, walk, claimed_weight=6).valid
    assert oracle_cpp(SAME2) is None
    assert oracle_cpp(FAIL4) is None


def test_oracle_cpp_fig1():
    # the petals can only be chained as p1, p3, p2, p3: one petal is walked twice
    w, walk = oracle_cpp(FIG1)
    assert w == 12
    assert verify_closed_pc_walk(FIG1, walk, claimed_weight=12).valid


def test_oracle_cpp_balanced_needs_no_copies():
    g = build_graph(2, 3, [(0, 1, 1, 1), (1, 0, 2, 1), (0, 1, 1, 1), (0, 2, 1, 9), (2, 0, 2, 9),
                           (1, 0, 2, 1)])
    assert oracle_cpp(g)[0] == 22


def test_oracle_euler():
    assert oracle_euler(CYC2) == [0, 1]
    assert oracle_euler(HUB5) is None
    assert oracle_euler(FAIL4) is None
    assert oracle_euler(FIG1) is None
    walk = oracle_euler(HUB5_PLUS)
    assert verify_closed_pc_walk(HUB5_PLUS, walk, require_trail=True).valid


def test_oracle_fev():
    assert oracle_fev_trail(HUB5, X1, V, [2], [2]) == (1, [1])
    assert oracle_fev_trail(HUB5, V, V, [1], [2]) == (2, [0, 1])
    assert oracle_fev_trail(SAME2, 0, 0) is None


def test_oracle_trail_connected():
    assert oracle_trail_connected(CYC2)
    assert oracle_trail_connected(HUB5)
    assert oracle_trail_connected(FIG1)
    assert not oracle_trail_connected(SAME2)
    assert not oracle_trail_connected(FAIL4)


def test_limits_are_hard_errors():
    big = build_graph(2, 2, [(0, 1, 1, 1), (1, 0, 2, 1)] * ((CPP_LIMIT + 2) // 2))
    with pytest.raises(OracleLimitError):
        oracle_cpp(big)
    mid = build_graph(2, 2, [(0, 1, 1, 1), (1, 0, 2, 1)] * ((SEARCH_LIMIT + 2) // 2))
    for fn in (oracle_euler, oracle_trail_connected):
        with pytest.raises(OracleLimitError):
            fn(mid)
    with pytest.raises(OracleLimitError):
        oracle_fev_trail(mid, 0, 0)
