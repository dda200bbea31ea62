import json

import pytest

from thompsonf.exact import Dyadic, parse_dyadic
from thompsonf.graph import FrontierError, LabeledGraph, ball, build_orbit_graph, distance
from thompsonf.schreier import act_on_point, dyadic_schreier_graph

D = parse_dyadic


def cyclic(n):
    return build_orbit_graph([0], lambda v, k, s: (v + s) % n, generators=(0,))


def test_depth_one_neighbours():
    g = dyadic_schreier_graph(depth=1)
    half = D("1/2")
    assert g.step(half, 0) == D("1/4")
    assert g.step(half, 1) == half
    assert g.step(half, 0, -1) == D("3/4")
    assert g.step(half, 1, -1) == half
    assert g.frontier == {D("1/4"), D("3/4")}


def test_regular_when_explored():
    g = dyadic_schreier_graph(depth=5)
    for v in g.explored():
        for k in (0, 1):
            assert len(g.successors(v, k)) == 1
            assert len(g.predecessors(v, k)) == 1


def test_finite_orbit_has_no_frontier():
    g = cyclic(7)
    assert len(g) == 7 and not g.frontier
    assert distance(g, 0, 3) == 3
    assert distance(g, 0, 4) == 3
    assert set(ball(g, [0], 1)) == {0, 1, 6}


def test_frontier_discipline():
    g = dyadic_schreier_graph(depth=2)
    far = next(iter(g.frontier))
    with pytest.raises(FrontierError):
        ball(g, [far], 1)
    with pytest.raises(FrontierError):
        distance(g, D("1/2"), Dyadic(1, 20))


def test_step_from_frontier_raises():
    g = dyadic_schreier_graph(depth=1)
    with pytest.raises(FrontierError):
        g.step(D("1/4"), 0)


def test_json_round_trip():
    g = dyadic_schreier_graph(depth=3)
    data = json.loads(g.to_json())
    assert data["generators"] == ["x0", "x1"]
    assert {"key", "frontier"} <= set(data["vertices"][0])
    assert {"source", "target", "label"} == set(data["edges"][0])
    h = LabeledGraph.from_json(g.to_json())
    assert len(h) == len(g) and h.edge_count() == g.edge_count()
    assert h.frontier == {str(v) for v in g.frontier}
    assert h.step("1/2", 0) == "1/4"


def test_dot_styles():
    dot = dyadic_schreier_graph(depth=1).to_dot()
    assert 'style=dashed, label="x0"' in dot
    assert 'style=solid, label="x1"' in dot
    assert "style=dotted" in dot


def test_deterministic_order():
    a = dyadic_schreier_graph(depth=6).to_json()
    b = dyadic_schreier_graph(depth=6).to_json()
    assert a == b


def test_max_vertices():
    g = build_orbit_graph([D("1/2")], act_on_point, max_vertices=10)
    assert g.meta["expanded"] == 10
    assert len(g.explored()) == 10
