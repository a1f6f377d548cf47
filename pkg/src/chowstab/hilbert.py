"""Graded-cone view of a lattice polytope.

The cone over P placed at height 1 has, at integer height i, exactly the
lattice points of the dilate i*P.  The coordinate sums of those slices
generate the same sequence the obstruction module tests, so the degreewise
comparison below must fail at exactly the levels with nonzero residuals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .delzant import is_reflexive
from .errors import InternalConsistencyError
from .lattice_points import DilationData, count_and_sum, enumerate_points
from .linalg import IntVec, RatVec, is_zero_vec
from .measure import measure_data
from .polytope import LatticePolytope, dilate


@dataclass(frozen=True)
class HilbertTruncation:
    """Slice data of the cone over a polytope up to a cutoff degree.

    ``sum_series[i-1]`` is the coordinate sum over the degree-i slice (the
    degree-i coefficient of the derivative generating function) and
    ``expected_series[i-1]`` is the degree-i coefficient of the comparison
    series i*E(i)*moment/vol.
    """

    order: int
    per_degree: tuple[DilationData, ...]
    sum_series: tuple[IntVec, ...]
    expected_series: tuple[RatVec, ...]


def cone_slice(p: LatticePolytope, height: int) -> list[IntVec]:
    """Lattice points of the cone over p x {1} at the given height.

    For integral p the degree-i slice is exactly (i*p) x {i}; degree 0 is the
    apex.  The slice is enumerated as the height-i dilate built explicitly and
    asserted against the direct enumeration of i*p through the cached facets.
    """
    if height < 0:
        raise ValueError("height must be nonnegative")
    if height == 0:
        return [(0,) * (p.dim + 1)]
    direct = enumerate_points(p, height)
    via_dilate = enumerate_points(dilate(p, height), 1)
    if direct != via_dilate:
        raise InternalConsistencyError(f"cone slice mismatch at height {height}")
    return [pt + (height,) for pt in direct]


def derivative_series(p: LatticePolytope, order: int) -> HilbertTruncation:
    """Truncation of the slice-sum generating function to the given order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    md = measure_data(p)
    per_degree = tuple(count_and_sum(p, i) for i in range(1, order + 1))
    sums = tuple(d.coordinate_sum for d in per_degree)
    expected = tuple(
        tuple(Fraction(i * d.count) * m / md.volume for m in md.moment)
        for i, d in enumerate(per_degree, start=1)
    )
    return HilbertTruncation(order, per_degree, sums, expected)


@dataclass(frozen=True)
class SeriesCheck:
    ok: bool
    first_failing_degree: int | None
    reflexive: bool
    # for reflexive input the stronger all-zero test, else None
    first_nonzero_degree: int | None

    def __bool__(self) -> bool:
        return self.ok


def semistable_series_check(p: LatticePolytope, order: int) -> SeriesCheck:
    """Compare slice sums against the moment-scaled count series, degreewise.

    Returns the first degree at which the comparison fails; an order of at
    least n+1 makes a clean pass conclusive for all degrees.  For reflexive
    input the stronger condition (all slice sums zero) is reported as well.
    """
    trunc = derivative_series(p, order)
    first_fail = None
    for i in range(1, order + 1):
        got = tuple(Fraction(c) for c in trunc.sum_series[i - 1])
        if got != trunc.expected_series[i - 1]:
            first_fail = i
            break
    reflexive = is_reflexive(p)
    first_nonzero = None
    if reflexive:
        for i in range(1, order + 1):
            if not is_zero_vec(trunc.sum_series[i - 1]):
                first_nonzero = i
                break
    ok = first_fail is None and (not reflexive or first_nonzero is None)
    return SeriesCheck(ok, first_fail, reflexive, first_nonzero)
