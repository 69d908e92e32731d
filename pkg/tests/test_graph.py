from fractions import Fraction

import pytest

from helpers import CYC2, FAIL4, FIG1, HUB5, HUB5_PLUS, SAME2, X1, V
from pc_postman.errors import GraphError, NotApplicableError, UnsupportedError
from pc_postman.graph import (ArcSpec, as_weight, build_graph, degree_profile, double_subdivide,
                              is_color_balanced, strong_and_local_check)


def test_build_assigns_ids_in_order():
    g = build_graph(2, 3, [(0, 1, 1, 2), (1, 2, 2, "1/2"), (2, 0, 1, 0.25)])
    assert [a.id for a in g.arcs] == [0, 1, 2]
    assert [a.weight for a in g.arcs] == [2, Fraction(1, 2), Fraction(1, 4)]
    assert g.total_weight == Fraction(11, 4)
    assert g.origin == (0, 1, 2)
    assert g.audit() == []


@pytest.mark.parametrize("spec, message", [
    ((0, 1, 3, 1), "color"),
    ((0, 5, 1, 1), "vertex"),
    ((1, 1, 1, 1), "self-loop"),
    ((0, 1, 1, -1), "negative"),
])
def test_build_rejects(spec, message):
    with pytest.raises(GraphError, match=message):
        build_graph(2, 2, [spec])


def test_as_weight_rejects_nonsense():
    with pytest.raises(GraphError):
        as_weight("abc")
    assert as_weight(3) == 3


def test_incidence_queries():
    assert HUB5.out_arcs(V) == (0, 2, 4)
    assert HUB5.out_arcs(V, 1) == (0, 2, 4)
    assert HUB5.out_arcs(V, 2) == ()
    assert HUB5.in_arcs(V, 2) == (1, 3)
    assert HUB5.multiplicity(0) == 2
    assert HUB5.multiplicity(1) == 1


def test_degree_profile_hub5():
    prof = degree_profile(HUB5)
    assert prof.out(V, 1) == 3 and prof.in_(V, 2) == 2
    assert prof.out(X1, 2) == 1 and prof.in_(X1, 1) == 2
    assert prof.out(V) == 3 and prof.in_(V) == 2


def test_balance_fixtures():
    assert is_color_balanced(CYC2).balanced
    assert is_color_balanced(FAIL4).balanced
    assert is_color_balanced(HUB5_PLUS).balanced
    assert not is_color_balanced(SAME2).balanced
    report = is_color_balanced(HUB5)
    assert not report.balanced
    # x1 receives two color-1 arcs but sends only one color-2 arc
    assert (X1, 2) in report.violations
    assert report.witness == report.violations[0]


def test_balance_three_colors():
    assert is_color_balanced(FIG1).balanced
    # in = out, but color 1 enters and must leave in color 1 only
    g = build_graph(3, 2, [(0, 1, 1, 1), (1, 0, 1, 1)])
    assert not is_color_balanced(g).balanced


def test_with_arcs_tracks_origin():
    g = CYC2.with_arcs([ArcSpec(0, 1, 1, 1)], [0])
    assert len(g.arcs) == 3
    assert g.origin == (0, 1, 0)
    assert g.multiplicity(0) == 2


def test_equality_and_hash():
    same = build_graph(2, 2, [(0, 1, 1, 1), (1, 0, 2, 2)])
    assert same == CYC2 and hash(same) == hash(CYC2)
    assert CYC2 != SAME2


def test_double_subdivide_hub5():
    g = double_subdivide(HUB5)
    # a5 (parallel to a1) becomes a 3-arc path through two new vertices
    assert len(g.arcs) == 7
    assert g.vertex_count == 5
    assert [(a.tail, a.head, a.color) for a in g.arcs[4:]] == [(0, 3, 1), (3, 4, 2), (4, 1, 1)]
    assert [a.weight for a in g.arcs[4:]] == [0, 1, 0]
    assert g.origin[4:] == (4, 4, 4)
    assert g.total_weight == HUB5.total_weight
    kinds = [(a.tail, a.head, a.color) for a in g.arcs]
    assert len(kinds) == len(set(kinds))
    # balance is preserved at the original vertices
    assert is_color_balanced(double_subdivide(HUB5_PLUS)).balanced


def test_double_subdivide_needs_two_colors():
    with pytest.raises(UnsupportedError):
        double_subdivide(FIG1)


def test_local_check():
    assert strong_and_local_check(CYC2).ok
    bad = strong_and_local_check(SAME2)
    assert not bad.ok and "color" in bad.diagnostic
    disconnected = build_graph(2, 4, [(0, 1, 1, 1), (1, 0, 2, 1), (2, 3, 1, 1), (3, 2, 2, 1)])
    assert "strongly connected" in strong_and_local_check(disconnected).diagnostic
    with pytest.raises(NotApplicableError):
        strong_and_local_check(build_graph(2, 2, [(0, 1, 1, 1)]))
