"""Torus semistability via weight polytopes.

A vector in a torus module is semistable iff the convex hull of its weights
contains the origin; for the diagonal-free subtorus of the special linear
group this turns into the existence of a diagonal point (t,...,t) in the
weight polytope.  For the variety attached to a lattice point configuration
the affine hull of the relevant weight polytope is known in closed form from
the volume and moment of the configuration's hull, which is all the diagonal
test needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .errors import AffineGenerationError, DimensionMismatchError
from .feasibility import (
    origin_in_hull,
    origin_in_hull_bruteforce,
    origin_in_hull_simplex,
)
from .linalg import (
    IntVec,
    RatVec,
    as_intvec,
    rank,
    solve_rectangular,
    vec_sub,
)
from .measure import measure_data
from .obstruction import affinely_generates_lattice
from .polytope import LatticePolytope


@dataclass(frozen=True)
class WeightSet:
    """Finite set of characters of a torus, stored sorted without duplicates."""

    ambient_dim: int
    weights: tuple[IntVec, ...]

    @classmethod
    def of(cls, weights: Iterable[Sequence[int]]) -> "WeightSet":
        pts = tuple(sorted(set(map(as_intvec, weights))))
        if not pts:
            raise ValueError("weight set must be nonempty")
        m = len(pts[0])
        if any(len(w) != m for w in pts):
            raise DimensionMismatchError("weights have mixed lengths")
        return cls(m, pts)


def is_torus_semistable(w: WeightSet, method: str = "auto") -> bool:
    """True iff the origin lies in the convex hull of the weights (exact).

    ``method`` selects the decision procedure: "auto" uses the barycentric
    search for at most 10 weights and exact simplex pivoting above that.
    """
    if method == "auto":
        return origin_in_hull(w.weights)
    if method == "bruteforce":
        return origin_in_hull_bruteforce(w.weights)
    if method == "simplex":
        return origin_in_hull_simplex(w.weights)
    raise ValueError(f"unknown method {method!r}")


def project_to_subtorus(w: WeightSet) -> WeightSet:
    """Image under (x_1,...,x_{m}) -> (x_1 - x_m, ..., x_{m-1} - x_m).

    This is the character projection for the subtorus of diagonal matrices
    with determinant one; weight polytopes push forward along it.
    """
    if w.ambient_dim < 2:
        raise DimensionMismatchError("projection needs ambient dimension >= 2")
    projected = [
        tuple(x - wt[-1] for x in wt[:-1]) for wt in w.weights
    ]
    return WeightSet.of(projected)


DIAGONAL_NONE = "none"
DIAGONAL_POINT = "point"
DIAGONAL_LINE = "whole-diagonal"


@dataclass(frozen=True)
class DiagonalResult:
    kind: str  # DIAGONAL_NONE, DIAGONAL_POINT or DIAGONAL_LINE
    t: Fraction | None = None

    def __bool__(self) -> bool:
        return self.kind != DIAGONAL_NONE


def diagonal_in_affine_hull(w: WeightSet) -> DiagonalResult:
    """Solve (t,...,t) in Aff(weights) exactly.

    Returns the unique t when it exists, reports the degenerate case where
    the entire diagonal lies in the hull, and "none" otherwise.
    """
    m = w.ambient_dim
    base = w.weights[0]
    diffs = [vec_sub(wt, base) for wt in w.weights[1:]]
    # unknowns: the affine coefficients of the differences, then t
    rows = [
        [Fraction(d[c]) for d in diffs] + [Fraction(-1)] for c in range(m)
    ]
    rhs = [Fraction(-base[c]) for c in range(m)]
    particular, _ = solve_rectangular(rows, rhs)
    if particular is None:
        return DiagonalResult(DIAGONAL_NONE)
    ones = [(1,) * m]
    if rank(diffs + ones) == rank(diffs):
        return DiagonalResult(DIAGONAL_LINE)
    return DiagonalResult(DIAGONAL_POINT, particular[-1])


@dataclass(frozen=True)
class AffineHull:
    """Affine subspace of weight space, cut out by exact linear equations.

    Each equation is (coefficients over the N+1 weight coordinates, value).
    """

    ambient_dim: int
    equations: tuple[tuple[RatVec, Fraction], ...]

    @property
    def dim(self) -> int:
        return self.ambient_dim - rank([eq[0] for eq in self.equations])

    def diagonal(self) -> DiagonalResult:
        """Solve all coordinates equal against the defining equations."""
        t: Fraction | None = None
        for coeffs, value in self.equations:
            s = sum(coeffs)
            if s == 0:
                if value != 0:
                    return DiagonalResult(DIAGONAL_NONE)
                continue
            candidate = value / s
            if t is None:
                t = candidate
            elif t != candidate:
                return DiagonalResult(DIAGONAL_NONE)
        if t is None:
            return DiagonalResult(DIAGONAL_LINE)
        return DiagonalResult(DIAGONAL_POINT, t)


def chow_weight_affine_hull(points: Sequence[Sequence[int]]) -> AffineHull:
    """Affine hull of the weight polytope attached to a point configuration.

    For N+1 points affinely generating the lattice, the hull in R^{N+1} is
    cut out by: coordinates summing to (n+1)!*vol(Q), and the point-weighted
    coordinate sums equal to (n+1)! times the moment of Q = conv(points).
    The equation count matches the torus-stabilizer dimension n+1, which is
    asserted on the output.
    """
    pts = [as_intvec(q) for q in points]
    if len(set(pts)) != len(pts):
        raise AffineGenerationError("configuration has repeated points")
    if not affinely_generates_lattice(pts):
        raise AffineGenerationError(
            "points do not affinely generate the integer lattice"
        )
    hull = LatticePolytope.from_points(pts)
    n = hull.dim
    md = measure_data(hull)
    scale = factorial(n + 1)
    equations: list[tuple[RatVec, Fraction]] = [
        (tuple(Fraction(1) for _ in pts), scale * md.volume)
    ]
    for c in range(n):
        equations.append(
            (tuple(Fraction(q[c]) for q in pts), scale * md.moment[c])
        )
    result = AffineHull(len(pts), tuple(equations))
    assert rank([eq[0] for eq in result.equations]) == n + 1
    return result
