from __future__ import annotations

from fractions import Fraction

import pytest

from chowstab import (
    CHOW_UNSTABLE_AT,
    OBSTRUCTION_VANISHES,
    REFLEXIVE_SEMISTABLE,
    AffineGenerationError,
    LatticePolytope,
    NonDelzantError,
    check_point_configuration,
    cross,
    cube,
    enumerate_points,
    hirzebruch,
    obstruction_vectors,
    residual_at,
    simplex,
    translate,
    verdict,
    volume,
)


@pytest.mark.parametrize("k", range(2, 7))
@pytest.mark.parametrize("i", [1, 2, 5])
def test_trapezoid_residual_formula(k, i):
    expected = Fraction(i * (i + 1) * k * (k - 1), 24)
    assert residual_at(hirzebruch(k), i) == (
        expected * (k - 1),
        expected * -2,
    )


def test_unit_triangle_residual_vanishes():
    assert residual_at(simplex(2), 1) == (0, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("i", [1, 2, 3])
def test_cube_residual_vanishes(n, i):
    assert residual_at(cube(n), i) == (Fraction(0),) * n


@pytest.mark.parametrize("k", range(2, 7))
def test_trapezoid_obstruction_vectors(k):
    vec = tuple(
        Fraction(k * (k - 1), 24) * c for c in (Fraction(k - 1), Fraction(-2))
    )
    assert obstruction_vectors(hirzebruch(k)) == (vec, vec)


def test_unit_square_obstruction_vectors_vanish():
    assert obstruction_vectors(cube(2)) == ((0, 0), (0, 0))


def test_verdict_trapezoid_unstable_at_all_levels():
    rep = verdict(hirzebruch(2), i_max=10)
    assert rep.verdict == CHOW_UNSTABLE_AT
    assert rep.failing_levels == tuple(range(1, 11))
    assert rep.span_rank == 1
    assert not rep.reflexive


@pytest.mark.parametrize("n", range(1, 5))
def test_verdict_simplex_vanishes(n):
    rep = verdict(simplex(n))
    assert rep.verdict == OBSTRUCTION_VANISHES
    assert rep.complete
    assert rep.span_rank == 0
    assert rep.vectors == ((Fraction(0),) * n,) * n


def test_verdict_requires_delzant():
    with pytest.raises(NonDelzantError):
        verdict(LatticePolytope([(0, 0), (1, 0), (0, 2)]))


def test_verdict_reflexive_path():
    rep = verdict(cross(2), require_delzant=False)
    assert rep.verdict == REFLEXIVE_SEMISTABLE
    assert all(m == 0 for m in rep.moment)


def test_verdict_translation_invariant():
    for p in (hirzebruch(2), simplex(2)):
        t = (3, -7)
        a = verdict(p, i_max=4)
        b = verdict(translate(p, t), i_max=4)
        assert a.verdict == b.verdict
        assert a.failing_levels == b.failing_levels
        assert a.per_level_residuals == b.per_level_residuals


def test_residuals_match_vector_polynomial():
    for p in (hirzebruch(3), cube(2), simplex(3)):
        rep = verdict(p, i_max=6)
        for i, res in rep.per_level_residuals.items():
            total = tuple(
                sum(Fraction(i) ** j * rep.vectors[j - 1][k] for j in range(1, p.dim + 1))
                for k in range(p.dim)
            )
            assert total == res


def test_verdict_unimodular_equivariance():
    # x -> (x1 + x2, x2) maps residuals by the same matrix
    p = hirzebruch(2)
    mapped = LatticePolytope([(v[0] + v[1], v[1]) for v in p.vertices])
    for i in (1, 2, 3):
        r = residual_at(p, i)
        rm = residual_at(mapped, i)
        assert rm == (r[0] + r[1], r[1])


def test_early_stop_reports_first_level_only():
    rep = verdict(hirzebruch(2), stop_at_first_failure=True)
    assert rep.verdict == CHOW_UNSTABLE_AT
    assert rep.failing_levels == (1,)
    assert rep.vectors is None
    assert not rep.complete


def test_point_configuration_triangle():
    assert check_point_configuration([(0, 0), (1, 0), (0, 1)]) == (0, 0)


def test_point_configuration_square():
    assert check_point_configuration([(0, 0), (1, 0), (0, 1), (1, 1)]) == (0, 0)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_point_configuration_consistent_with_residual(i):
    for p in (hirzebruch(2), simplex(2), cube(2)):
        pts = enumerate_points(p, i)
        residual = check_point_configuration(pts)
        scaled = residual_at(p, i)
        assert residual == tuple(r / volume(p) for r in scaled)


def test_point_configuration_rejects_sublattice():
    with pytest.raises(AffineGenerationError):
        check_point_configuration([(0, 0), (2, 0), (0, 2)])


def test_point_configuration_rejects_duplicates():
    with pytest.raises(AffineGenerationError):
        check_point_configuration([(0, 0), (1, 0), (0, 1), (0, 0)])
