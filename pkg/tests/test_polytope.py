from __future__ import annotations

from fractions import Fraction

import pytest

from chowstab import (
    DegenerateInputError,
    Halfspace,
    HalfspaceRep,
    LatticePolytope,
    cube,
    dilate,
    hirzebruch,
    hrep_to_vrep,
    simplex,
    translate,
    triangulate,
    vertex_edge_directions,
    vrep_to_hrep,
)
from chowstab.measure import simplex_volume

UNIT_SQUARE = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
DELTA2 = hirzebruch(2)


def _ineq_set(h: HalfspaceRep):
    return {(hs.normal, hs.offset) for hs in h.inequalities}


def test_vrep_to_hrep_unit_square():
    assert _ineq_set(vrep_to_hrep(UNIT_SQUARE)) == {
        ((1, 0), 0),
        ((0, 1), 0),
        ((-1, 0), 1),
        ((0, -1), 1),
    }


def test_vrep_to_hrep_segment():
    seg = LatticePolytope([(-1,), (1,)])
    assert _ineq_set(vrep_to_hrep(seg)) == {((1,), 1), ((-1,), 1)}


def test_vrep_to_hrep_trapezoid():
    # hand convex hull of the four points of the k=2 trapezoid
    assert _ineq_set(vrep_to_hrep(DELTA2)) == {
        ((0, 1), 0),
        ((1, 0), 0),
        ((0, -1), 1),
        ((-1, -1), 2),
    }


def test_vrep_to_hrep_rejects_flat_input():
    with pytest.raises(DegenerateInputError):
        vrep_to_hrep(LatticePolytope([(0, 0), (1, 1), (2, 2)]))


def test_hrep_to_vrep_triangle():
    h = HalfspaceRep(
        2,
        (
            Halfspace((1, 0), 0),
            Halfspace((0, 1), 0),
            Halfspace((-1, -1), 1),
        ),
    )
    p = hrep_to_vrep(h)
    assert p.vertices == ((0, 0), (0, 1), (1, 0))


def test_hrep_to_vrep_cube():
    ineqs = []
    for k in range(3):
        for sign in (1, -1):
            ineqs.append(Halfspace(tuple(sign * int(k == j) for j in range(3)), 1))
    p = hrep_to_vrep(HalfspaceRep(3, tuple(ineqs)))
    assert p.n_vertices == 8
    assert all(all(abs(c) == 1 for c in v) for v in p.vertices)


def test_hrep_to_vrep_unbounded_rejected():
    h = HalfspaceRep(2, (Halfspace((1, 0), 0), Halfspace((0, 1), 0)))
    with pytest.raises(DegenerateInputError):
        hrep_to_vrep(h)


def test_hrep_to_vrep_empty_rejected():
    h = HalfspaceRep(
        1, (Halfspace((1,), -2), Halfspace((-1,), 1))
    )  # x >= 2 and x <= 1
    with pytest.raises(DegenerateInputError):
        hrep_to_vrep(h)


def test_hrep_to_vrep_flat_rejected():
    h = HalfspaceRep(1, (Halfspace((1,), 0), Halfspace((-1,), 0)))
    with pytest.raises(DegenerateInputError):
        hrep_to_vrep(h)


def test_hrep_to_vrep_fractional_vertex_rejected():
    h = HalfspaceRep(1, (Halfspace((2,), 1), Halfspace((-1,), 1)))
    with pytest.raises(DegenerateInputError):
        hrep_to_vrep(h)
    p = hrep_to_vrep(h, require_integral=False)
    assert p is not None


def test_contains_boundary_and_interior():
    h = UNIT_SQUARE.facets
    assert h.contains((Fraction(1, 2), Fraction(1, 2)))
    assert h.contains((1, 0))
    assert not h.contains((2, 0))


def test_dilate_simplex():
    assert dilate(simplex(2), 2).vertices == ((0, 0), (0, 2), (2, 0))


def test_dilate_identity_and_segment():
    assert dilate(DELTA2, 1) == DELTA2
    assert dilate(LatticePolytope([(0,), (1,)]), 5).vertices == ((0,), (5,))


def test_dilate_composes():
    assert dilate(dilate(DELTA2, 2), 3) == dilate(DELTA2, 6)


def test_dilate_rejects_nonpositive():
    with pytest.raises(ValueError):
        dilate(DELTA2, 0)


def test_translate_examples():
    moved = translate(UNIT_SQUARE, (3, -1))
    assert moved.vertices == ((3, -1), (3, 0), (4, -1), (4, 0))
    assert translate(UNIT_SQUARE, (0, 0)) == UNIT_SQUARE
    tri = translate(simplex(2), (-1, -1))
    assert tri.vertices == ((-1, -1), (-1, 0), (0, -1))


def test_translate_preserves_normals_and_edges():
    moved = translate(DELTA2, (7, -4))
    assert {h.normal for h in moved.facets.inequalities} == {
        h.normal for h in DELTA2.facets.inequalities
    }
    for idx, v in enumerate(DELTA2.vertices):
        moved_idx = moved.vertices.index((v[0] + 7, v[1] - 4))
        assert vertex_edge_directions(DELTA2, idx) == vertex_edge_directions(
            moved, moved_idx
        )


def test_edge_directions_unit_square_corner():
    idx = UNIT_SQUARE.vertices.index((0, 0))
    assert set(vertex_edge_directions(UNIT_SQUARE, idx)) == {(1, 0), (0, 1)}


def test_edge_directions_trapezoid():
    idx = DELTA2.vertices.index((2, 0))
    assert set(vertex_edge_directions(DELTA2, idx)) == {(-1, 0), (-1, 1)}
    idx = DELTA2.vertices.index((1, 1))
    assert set(vertex_edge_directions(DELTA2, idx)) == {(-1, 0), (1, -1)}


def test_triangulate_simplex_is_itself():
    cells = triangulate(simplex(3))
    assert len(cells) == 1
    assert set(cells[0].vertices) == set(simplex(3).vertices)


def test_triangulate_unit_square():
    assert len(triangulate(UNIT_SQUARE)) == 2


def test_triangulate_trapezoid_volume():
    cells = triangulate(DELTA2)
    assert len(cells) == 2
    assert sum(simplex_volume(c) for c in cells) == Fraction(3, 2)


def test_triangulation_volume_apex_independent():
    for p in (DELTA2, cube(3)):
        totals = set()
        for apex in (p.vertices[0], p.vertices[-1]):
            cells = triangulate(p, apex=apex)
            totals.add(sum(simplex_volume(c) for c in cells))
        assert len(totals) == 1


@pytest.mark.parametrize(
    "p",
    [UNIT_SQUARE, DELTA2, simplex(2), simplex(3), cube(3), hirzebruch(4)],
)
def test_hrep_vrep_round_trip(p):
    back = hrep_to_vrep(p.facets)
    assert back.vertices == p.vertices


@pytest.mark.parametrize("p", [UNIT_SQUARE, DELTA2, simplex(3), cube(3)])
def test_vertices_on_at_least_n_facets(p):
    for v in p.vertices:
        tight = sum(1 for h in p.facets.inequalities if h.value_at(v) == 0)
        assert tight >= p.dim


def test_from_points_drops_non_vertices():
    p = LatticePolytope.from_points([(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)])
    assert p.vertices == ((0, 0), (0, 2), (2, 0))
