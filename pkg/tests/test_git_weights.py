from __future__ import annotations

import random
from fractions import Fraction

import pytest

from chowstab import (
    AffineGenerationError,
    WeightSet,
    chow_weight_affine_hull,
    check_point_configuration,
    cube,
    diagonal_in_affine_hull,
    enumerate_points,
    hirzebruch,
    is_torus_semistable,
    project_to_subtorus,
    simplex,
)
from chowstab.git_weights import DIAGONAL_LINE, DIAGONAL_NONE, DIAGONAL_POINT

from conftest import barycentric_origin_in_hull


def test_symmetric_weights_semistable():
    assert is_torus_semistable(WeightSet.of([(1, 0), (-1, 0), (0, 1), (0, -1)]))


def test_shifted_weights_unstable():
    assert not is_torus_semistable(WeightSet.of([(1, 1), (2, 1)]))


def test_origin_weight_semistable():
    assert is_torus_semistable(WeightSet.of([(0, 0)]))


def test_methods_agree():
    rng = random.Random(5)
    for _ in range(30):
        m = rng.randint(1, 3)
        pts = [
            tuple(rng.randint(-3, 3) for _ in range(m))
            for _ in range(rng.randint(1, 8))
        ]
        w = WeightSet.of(pts)
        expected = is_torus_semistable(w, method="bruteforce")
        assert is_torus_semistable(w, method="simplex") == expected
        assert is_torus_semistable(w) == expected


def test_projection_examples():
    assert project_to_subtorus(WeightSet.of([(1, 0, 1)])).weights == ((0, -1),)
    assert project_to_subtorus(WeightSet.of([(3, 3, 3)])).weights == ((0, 0),)
    assert project_to_subtorus(WeightSet.of([(1, 2, 3), (0, 0, 0)])).weights == (
        (-2, -1),
        (0, 0),
    )


def test_projection_of_diagonal_is_semistable():
    w = project_to_subtorus(WeightSet.of([(2, 2, 2), (5, 5, 5)]))
    assert w.weights == ((0, 0),)
    assert is_torus_semistable(w)


def test_diagonal_in_affine_hull_examples():
    res = diagonal_in_affine_hull(WeightSet.of([(1, 0), (0, 1)]))
    assert res.kind == DIAGONAL_POINT and res.t == Fraction(1, 2)
    res = diagonal_in_affine_hull(WeightSet.of([(1, 0), (2, 0)]))
    assert res.kind == DIAGONAL_POINT and res.t == 0
    res = diagonal_in_affine_hull(WeightSet.of([(1, 2)]))
    assert res.kind == DIAGONAL_NONE


def test_diagonal_degenerate_whole_line():
    res = diagonal_in_affine_hull(WeightSet.of([(0, 0), (1, 1)]))
    assert res.kind == DIAGONAL_LINE


def test_chow_hull_unit_triangle():
    pts = [(0, 0), (1, 0), (0, 1)]
    hull = chow_weight_affine_hull(pts)
    assert hull.ambient_dim == 3
    assert hull.dim == 0  # (N+1) - (n+1) = 3 - 3
    eqs = dict()
    for coeffs, value in hull.equations:
        eqs[tuple(coeffs)] = value
    assert eqs[(1, 1, 1)] == 3  # 3! * vol = 6 * 1/2
    diag = hull.diagonal()
    assert diag.kind == DIAGONAL_POINT and diag.t == 1


def test_chow_hull_square_diagonal():
    pts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    hull = chow_weight_affine_hull(pts)
    assert hull.dim == 4 - 3
    diag = hull.diagonal()
    assert diag.kind == DIAGONAL_POINT and diag.t == Fraction(3, 2)


def test_chow_hull_trapezoid_points_fail_diagonal():
    pts = enumerate_points(hirzebruch(2), 1)
    hull = chow_weight_affine_hull(pts)
    assert hull.diagonal().kind == DIAGONAL_NONE


def test_chow_hull_rejects_bad_configuration():
    with pytest.raises(AffineGenerationError):
        chow_weight_affine_hull([(0, 0), (2, 0), (0, 2)])


@pytest.mark.parametrize("i", [1, 2, 3])
@pytest.mark.parametrize("gen", [simplex, cube])
def test_diagonal_solvability_iff_zero_residual(gen, i):
    pts = enumerate_points(gen(2), i)
    hull = chow_weight_affine_hull(pts)
    residual = check_point_configuration(pts)
    assert bool(hull.diagonal()) == all(r == 0 for r in residual)
    assert hull.dim == len(pts) - 3


def test_brute_oracle_agreement():
    rng = random.Random(31337)
    for _ in range(50):
        m = rng.randint(1, 3)
        pts = [
            tuple(rng.randint(-3, 3) for _ in range(m))
            for _ in range(rng.randint(1, 8))
        ]
        w = WeightSet.of(pts)
        assert is_torus_semistable(w) == barycentric_origin_in_hull(w.weights)
