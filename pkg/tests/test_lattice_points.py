from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowstab import (
    LatticePolytope,
    count_and_sum,
    cross,
    cube,
    dilate,
    enumerate_points,
    hirzebruch,
    simplex,
    translate,
)

from conftest import box_count_and_sum, box_points, random_polygon


def test_enumerate_unit_square():
    assert enumerate_points(cube(2), 1) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_enumerate_is_lexicographic():
    pts = enumerate_points(hirzebruch(2), 2)
    assert pts == sorted(pts)


def test_trapezoid_counts_match_closed_form():
    p = hirzebruch(2)
    assert len(enumerate_points(p, 1)) == 5
    assert len(enumerate_points(p, 2)) == 12


def test_trapezoid_count_and_sum():
    p = hirzebruch(2)
    d1 = count_and_sum(p, 1)
    assert (d1.count, d1.coordinate_sum) == (5, (4, 2))
    d2 = count_and_sum(p, 2)
    assert (d2.count, d2.coordinate_sum) == (12, (19, 10))


def test_symmetric_segment():
    seg = LatticePolytope([(-1,), (1,)])
    d = count_and_sum(seg, 1)
    assert (d.count, d.coordinate_sum) == (3, (0,))


def test_count_and_sum_rejects_nonpositive_level():
    with pytest.raises(ValueError):
        count_and_sum(cube(2), 0)


@pytest.mark.parametrize(
    "p",
    [cube(2), cube(3), simplex(2), simplex(3), hirzebruch(4), cross(3)],
)
@pytest.mark.parametrize("level", [1, 2, 3])
def test_aggregates_match_box_oracle(p, level):
    d = count_and_sum(p, level)
    count, sums = box_count_and_sum(p, level)
    assert d.count == count
    assert d.coordinate_sum == sums
    assert enumerate_points(p, level) == box_points(p, level)


def test_translation_covariance():
    p = hirzebruch(3)
    t = (4, -2)
    for i in (1, 2, 3):
        d = count_and_sum(p, i)
        moved = count_and_sum(translate(p, t), i)
        assert moved.count == d.count
        assert moved.coordinate_sum == tuple(
            s + i * tv * d.count for s, tv in zip(d.coordinate_sum, t)
        )


def test_central_symmetry_zero_sum():
    for p in (cross(2), cross(3), LatticePolytope([(-2,), (2,)])):
        for i in (1, 2, 3):
            assert all(c == 0 for c in count_and_sum(p, i).coordinate_sum)


def test_count_strictly_monotone():
    for p in (simplex(3), hirzebruch(2)):
        counts = [count_and_sum(p, i).count for i in range(1, 6)]
        assert all(a < b for a, b in zip(counts, counts[1:]))


def test_jobs_do_not_change_aggregates():
    a = count_and_sum(cube(3), 4, jobs=1)
    b = count_and_sum(LatticePolytope(cube(3).vertices), 4, jobs=3)
    assert (a.count, a.coordinate_sum) == (b.count, b.coordinate_sum)


def test_random_polygons_against_oracle():
    rng = random.Random(2024)
    for _ in range(12):
        p = random_polygon(rng)
        for i in (1, 2):
            d = count_and_sum(p, i)
            count, sums = box_count_and_sum(p, i)
            assert (d.count, d.coordinate_sum) == (count, sums)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=7
    ),
    st.integers(1, 3),
)
def test_dilate_then_enumerate_matches_scaled_level(points, level):
    try:
        p = LatticePolytope.from_points(points)
    except Exception:
        return
    assert enumerate_points(dilate(p, level), 1) == enumerate_points(p, level)
