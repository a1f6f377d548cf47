"""The central semistability check for polarized toric manifolds.

For a Delzant polytope the level-i obstruction is the cleared residual

    vol(P) * s_P(i) - i * E_P(i) * integral_P x dv

which must vanish at every level for asymptotic Chow semistability.  Both
sides are polynomial in i of degree <= n+1, so vanishing at i = 1..n+1
already proves vanishing identically.  The per-degree obstruction vectors
are the coefficients of that residual polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .delzant import is_delzant, is_reflexive
from .ehrhart import ehrhart_polynomial, sum_polynomial
from .errors import (
    AffineGenerationError,
    InternalConsistencyError,
    NonDelzantError,
)
from .lattice_points import count_and_sum
from .linalg import (
    IntVec,
    RatVec,
    as_intvec,
    det_int,
    is_zero_vec,
    rank,
    solve,
    vec_sub,
    zero_vec,
)
from .measure import measure_data
from .polytope import LatticePolytope

OBSTRUCTION_VANISHES = "OBSTRUCTION_VANISHES"
CHOW_UNSTABLE_AT = "CHOW_UNSTABLE_AT"
REFLEXIVE_SEMISTABLE = "REFLEXIVE_SEMISTABLE"
REFLEXIVE_UNSTABLE = "REFLEXIVE_UNSTABLE"


@dataclass(frozen=True)
class ObstructionReport:
    polytope: str
    dim: int
    volume: Fraction
    moment: RatVec
    per_level_residuals: dict[int, RatVec]
    per_level_data: dict[int, tuple[int, IntVec]]  # level -> (count, sum)
    verdict: str
    failing_levels: tuple[int, ...]
    vectors: tuple[RatVec, ...] | None
    span_rank: int | None
    reflexive: bool
    delzant: bool
    complete: bool  # levels 1..n+1 all checked, so a clean pass holds for every i

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(sorted(self.per_level_residuals))


def residual_at(p: LatticePolytope, level: int, jobs: int = 1) -> RatVec:
    """Cleared residual at one level, from raw enumeration data.

    Zero iff the lattice-point sum of level*p is the required multiple of
    the barycenter.
    """
    md = measure_data(p)
    data = count_and_sum(p, level, jobs=jobs)
    return tuple(
        md.volume * s - level * data.count * m
        for s, m in zip(data.coordinate_sum, md.moment)
    )


def obstruction_vectors(p: LatticePolytope) -> tuple[RatVec, ...]:
    """Per-degree obstruction vectors for j = 1..n, from interpolated polynomials.

    Also asserts the degree-(n+1) cancellation: the leading coefficients of
    the interpolated polynomials must reproduce vol and moment exactly.
    """
    n = p.dim
    md = measure_data(p)
    count_poly = ehrhart_polynomial(p)
    sum_poly = sum_polynomial(p)
    top = tuple(
        md.volume * sc - count_poly.coefficients[n] * m
        for sc, m in zip(sum_poly.coefficients[n], md.moment)
    )
    if not is_zero_vec(top):
        raise InternalConsistencyError(
            "degree-(n+1) cancellation failed; enumeration or interpolation bug"
        )
    vectors = []
    for j in range(1, n + 1):
        vectors.append(
            tuple(
                md.volume * sc - count_poly.coefficients[j - 1] * m
                for sc, m in zip(sum_poly.coefficients[j - 1], md.moment)
            )
        )
    return tuple(vectors)


def _vectors_from_residuals(
    residuals: dict[int, RatVec], n: int, dim: int
) -> tuple[RatVec, ...]:
    """Recover the obstruction vectors from residuals at levels 1..n.

    The residual is a polynomial of degree <= n in the level with zero
    constant term, so n levels determine its coefficients.
    """
    nodes = list(range(1, n + 1))
    vandermonde = [[Fraction(i**j) for j in range(1, n + 1)] for i in nodes]
    per_coord = []
    for k in range(dim):
        coeffs = solve(vandermonde, [residuals[i][k] for i in nodes])
        assert coeffs is not None
        per_coord.append(coeffs)
    return tuple(
        tuple(per_coord[k][j] for k in range(dim)) for j in range(n)
    )


def verdict(
    p: LatticePolytope,
    i_max: int | None = None,
    *,
    require_delzant: bool = True,
    stop_at_first_failure: bool = False,
    jobs: int = 1,
) -> ObstructionReport:
    """Evaluate the obstruction at levels 1..max(i_max, n+1) and classify.

    Any nonzero residual gives CHOW_UNSTABLE_AT with the offending levels
    (with ``stop_at_first_failure`` the scan stops at the first one, which
    already settles the verdict).  A clean pass is OBSTRUCTION_VANISHES --
    the necessary condition holds, nothing more -- except for reflexive
    input, where it upgrades to REFLEXIVE_SEMISTABLE when the moment also
    vanishes and downgrades to REFLEXIVE_UNSTABLE when it does not.
    """
    n = p.dim
    dz = is_delzant(p)
    if require_delzant and not dz.is_delzant:
        bad = dz.failures[0]
        raise NonDelzantError(
            f"not a Delzant polytope: vertex {bad.vertex} fails ({bad.reason})"
        )
    levels = range(1, max(i_max or 0, n + 1) + 1)
    md = measure_data(p)
    residuals: dict[int, RatVec] = {}
    level_data: dict[int, tuple[int, IntVec]] = {}
    failing: list[int] = []
    for i in levels:
        data = count_and_sum(p, i, jobs=jobs)
        level_data[i] = (data.count, data.coordinate_sum)
        res = tuple(
            md.volume * s - i * data.count * m
            for s, m in zip(data.coordinate_sum, md.moment)
        )
        residuals[i] = res
        if not is_zero_vec(res):
            failing.append(i)
            if stop_at_first_failure:
                break
    complete = set(range(1, n + 2)) <= set(residuals)
    reflexive = is_reflexive(p)
    if failing:
        kind = CHOW_UNSTABLE_AT
    elif reflexive:
        kind = REFLEXIVE_SEMISTABLE if is_zero_vec(md.moment) else REFLEXIVE_UNSTABLE
    else:
        kind = OBSTRUCTION_VANISHES

    vectors: tuple[RatVec, ...] | None = None
    span = None
    if set(range(1, n + 1)) <= set(residuals):
        vectors = _vectors_from_residuals(residuals, n, n)
        for i, res in residuals.items():
            recomputed = _eval_vector_poly(vectors, i, n)
            if recomputed != res:
                raise InternalConsistencyError(
                    f"residual at level {i} disagrees with its polynomial form"
                )
        span = rank(vectors)
    return ObstructionReport(
        polytope=p.name,
        dim=n,
        volume=md.volume,
        moment=md.moment,
        per_level_residuals=residuals,
        per_level_data=level_data,
        verdict=kind,
        failing_levels=tuple(failing),
        vectors=vectors,
        span_rank=span,
        reflexive=reflexive,
        delzant=dz.is_delzant,
        complete=complete,
    )


def _eval_vector_poly(vectors: tuple[RatVec, ...], t: int, dim: int) -> RatVec:
    acc = list(zero_vec(dim))
    for coeff in reversed(vectors):
        for k in range(dim):
            acc[k] = acc[k] * t + coeff[k]
    return tuple(a * t for a in acc)


def affinely_generates_lattice(points: list[IntVec]) -> bool:
    """True iff the differences of the points generate Z^n as a group.

    Criterion: the difference matrix has rank n and the gcd of its maximal
    minors is 1.
    """
    base = points[0]
    n = len(base)
    diffs = [vec_sub(q, base) for q in points[1:]]
    if rank(diffs) < n:
        return False
    g = 0
    for subset in combinations(diffs, n):
        g = gcd(g, abs(det_int(subset)))
        if g == 1:
            return True
    return g == 1


def check_point_configuration(points: list[IntVec] | list) -> RatVec:
    """Necessary-condition residual for the projective variety of a point set.

    For a configuration of N+1 lattice points spanning Q = conv(points), the
    residual is sum(points) - (N+1)/vol(Q) * moment(Q); Chow semistability of
    the associated embedded torus closure forces it to vanish.
    """
    pts = [as_intvec(q) for q in points]
    if len(set(pts)) != len(pts):
        raise AffineGenerationError("configuration has repeated points")
    if not affinely_generates_lattice(pts):
        raise AffineGenerationError(
            "points do not affinely generate the integer lattice"
        )
    hull = LatticePolytope.from_points(pts)
    md = measure_data(hull)
    total = [0] * hull.dim
    for q in pts:
        for k in range(hull.dim):
            total[k] += q[k]
    factor = Fraction(len(pts)) / md.volume
    return tuple(Fraction(total[k]) - factor * md.moment[k] for k in range(hull.dim))
