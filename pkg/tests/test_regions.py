from fractions import Fraction

import pytest

from wildcat.graphs import Vertex, EdgeInterior, GraphError
from wildcat.regions import (VertexCell, ClosedEdgeCell, OpenEdgeCell,
                             SubArcCell, CellUnion, whole_graph_cells, Box,
                             Shift, Region)
from wildcat.planner import CycleCoords

from gen import path_graph, cycle_graph, loop_graph


def test_cell_membership():
    g = path_graph(3)
    u = CellUnion(g, [ClosedEdgeCell("e0")])
    assert u.contains(Vertex("v0"))
    assert u.contains(Vertex("v1"))
    assert u.contains(EdgeInterior("e0", Fraction(1, 3)))
    assert not u.contains(EdgeInterior("e1", Fraction(1, 3)))
    assert not u.contains(Vertex("v2"))


def test_open_edge_cell():
    g = path_graph(2)
    u = CellUnion(g, [OpenEdgeCell("e0")])
    assert u.contains(EdgeInterior("e0", Fraction(1, 2)))
    assert not u.contains(Vertex("v0"))
    assert not u.is_closed()
    with_ends = CellUnion(g, [OpenEdgeCell("e0"), VertexCell("v0"), VertexCell("v1")])
    assert with_ends.is_closed()


def test_subarc_cell():
    g = path_graph(2)
    u = CellUnion(g, [SubArcCell("e0", Fraction(0), Fraction(1, 2))])
    assert u.contains(Vertex("v0"))  # lo = 0 includes the endpoint
    assert u.contains(EdgeInterior("e0", Fraction(1, 2)))
    assert not u.contains(EdgeInterior("e0", Fraction(3, 4)))
    assert not u.contains(Vertex("v1"))
    assert u.is_closed()
    with pytest.raises(GraphError):
        SubArcCell("e0", Fraction(3, 4), Fraction(1, 4))


def test_box_region():
    g = path_graph(2)
    everything = whole_graph_cells(g)
    v0 = CellUnion(g, [VertexCell("v0")])
    region = Region(Box(v0, everything))
    assert region.contains(Vertex("v0"), EdgeInterior("e0", Fraction(1, 2)))
    assert not region.contains(Vertex("v1"), Vertex("v0"))
    assert region.is_closed()


def test_shift_region_is_antidiagonal():
    g = cycle_graph(4)
    cyc = CycleCoords(g)
    anti = Region(Shift(cyc, cyc.length / 2))
    assert anti.contains(Vertex("v0"), Vertex("v2"))
    assert anti.contains(Vertex("v2"), Vertex("v0"))
    assert anti.contains(EdgeInterior("e0", Fraction(1, 4)),
                         EdgeInterior("e2", Fraction(1, 4)))
    assert not anti.contains(Vertex("v0"), Vertex("v1"))
    assert anti.is_closed()


def test_shift_on_loop():
    g = loop_graph()
    cyc = CycleCoords(g)
    anti = Shift(cyc, Fraction(1, 2))
    assert anti.contains(EdgeInterior("l", Fraction(1, 4)),
                         EdgeInterior("l", Fraction(3, 4)))
    assert not anti.contains(EdgeInterior("l", Fraction(1, 4)),
                             EdgeInterior("l", Fraction(1, 2)))
