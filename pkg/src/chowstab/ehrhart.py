"""Lattice-count and lattice-sum polynomials of a polytope.

The count polynomial has degree n, constant term 1 and leading coefficient
vol(P); the vector-valued sum polynomial has degree n+1, no constant term
and leading coefficient equal to the moment of P.  Both are recovered by
exact interpolation through enumerated dilation data; for polygons the
closed forms in terms of vol, moment and the first two dilations are also
provided.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError
from .lattice_points import count_and_sum
from .linalg import RatVec, solve, zero_vec
from .measure import measure_data
from .polytope import LatticePolytope


@dataclass(frozen=True)
class EhrhartPolynomial:
    """coefficients[j] is the coefficient of t**j, j = 0..n."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, t: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    __call__ = evaluate


@dataclass(frozen=True)
class SumPolynomial:
    """coefficients[j-1] is the vector coefficient of t**j, j = 1..n+1.

    The constant term is identically zero and stored implicitly.
    """

    coefficients: tuple[RatVec, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @property
    def ambient_dim(self) -> int:
        return len(self.coefficients[0])

    def evaluate(self, t: int | Fraction) -> RatVec:
        n = self.ambient_dim
        acc = list(zero_vec(n))
        for coeff in reversed(self.coefficients):
            for k in range(n):
                acc[k] = acc[k] * t + coeff[k]
        return tuple(a * t for a in acc)

    __call__ = evaluate


def ehrhart_polynomial(
    p: LatticePolytope, nodes: Sequence[int] | None = None
) -> EhrhartPolynomial:
    """Interpolate the degree-n count polynomial exactly.

    Default nodes are 0..n with the count at 0 defined as 1; any n+1 distinct
    nonnegative integers work and give the same polynomial.
    """
    n = p.dim
    if nodes is None:
        nodes = list(range(n + 1))
    nodes = list(dict.fromkeys(int(i) for i in nodes))
    if len(nodes) != n + 1 or any(i < 0 for i in nodes):
        raise ValueError(f"need {n + 1} distinct nonnegative integer nodes")
    values = [1 if i == 0 else count_and_sum(p, i).count for i in nodes]
    vandermonde = [[Fraction(i**j) for j in range(n + 1)] for i in nodes]
    coeffs = solve(vandermonde, [Fraction(v) for v in values])
    assert coeffs is not None  # distinct nodes => invertible
    return EhrhartPolynomial(coeffs)


def sum_polynomial(
    p: LatticePolytope, nodes: Sequence[int] | None = None
) -> SumPolynomial:
    """Interpolate the vector-valued sum polynomial (zero constant term)."""
    n = p.dim
    if nodes is None:
        nodes = list(range(1, n + 2))
    nodes = list(dict.fromkeys(int(i) for i in nodes))
    if len(nodes) != n + 1 or any(i < 1 for i in nodes):
        raise ValueError(f"need {n + 1} distinct positive integer nodes")
    data = [count_and_sum(p, i).coordinate_sum for i in nodes]
    vandermonde = [[Fraction(i**j) for j in range(1, n + 2)] for i in nodes]
    per_coord = []
    for k in range(n):
        coeffs = solve(vandermonde, [Fraction(d[k]) for d in data])
        assert coeffs is not None
        per_coord.append(coeffs)
    return SumPolynomial(
        tuple(tuple(per_coord[k][j] for k in range(n)) for j in range(n + 1))
    )


def polygon_closed_forms(
    p: LatticePolytope,
) -> tuple[EhrhartPolynomial, SumPolynomial]:
    """Dimension-2 closed forms from vol, moment and the first two dilations."""
    if p.dim != 2:
        raise DimensionMismatchError("closed forms are specific to dimension 2")
    md = measure_data(p)
    vol, mom = md.volume, md.moment
    d1 = count_and_sum(p, 1)
    d2 = count_and_sum(p, 2)
    e1, e2 = Fraction(d1.count), Fraction(d2.count)
    s1 = tuple(Fraction(c) for c in d1.coordinate_sum)
    s2 = tuple(Fraction(c) for c in d2.coordinate_sum)
    count_poly = EhrhartPolynomial(
        (2 * e1 - e2 + 2 * vol, e2 - e1 - 3 * vol, vol)
    )
    sum_t1 = tuple((4 * s1[k] - s2[k] + 4 * mom[k]) / 2 for k in range(2))
    sum_t2 = tuple((s2[k] - 2 * s1[k] - 6 * mom[k]) / 2 for k in range(2))
    sum_poly = SumPolynomial((sum_t1, sum_t2, mom))
    return count_poly, sum_poly


def reciprocity_check(e: EhrhartPolynomial, p: LatticePolytope) -> bool:
    """Optional sanity check: (-1)^n e(-1) equals the interior point count of p."""
    from .lattice_points import enumerate_points

    interior = [
        pt
        for pt in enumerate_points(p, 1)
        if all(h.value_at(pt) > 0 for h in p.facets.inequalities)
    ]
    return (-1) ** p.dim * e.evaluate(-1) == len(interior)


@dataclass(frozen=True)
class ValidationMismatch:
    level: int
    quantity: str  # "count" or "sum"
    expected: object
    got: object


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    mismatches: tuple[ValidationMismatch, ...]

    def __bool__(self) -> bool:
        return self.ok


def validate(
    e: EhrhartPolynomial,
    s: SumPolynomial,
    p: LatticePolytope,
    extra_levels: int,
) -> ValidationResult:
    """Re-check both polynomials against fresh enumeration above the nodes."""
    if extra_levels < 1:
        raise ValueError("extra_levels must be >= 1")
    n = p.dim
    mismatches = []
    for level in range(n + 2, n + 2 + extra_levels):
        data = count_and_sum(p, level)
        want_count = e.evaluate(level)
        if want_count != data.count:
            mismatches.append(
                ValidationMismatch(level, "count", data.count, want_count)
            )
        want_sum = s.evaluate(level)
        if tuple(want_sum) != tuple(Fraction(c) for c in data.coordinate_sum):
            mismatches.append(
                ValidationMismatch(level, "sum", data.coordinate_sum, want_sum)
            )
    return ValidationResult(not mismatches, tuple(mismatches))
