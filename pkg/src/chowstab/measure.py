"""Exact Euclidean volume and first moment of lattice polytopes.

Both are evaluated over the star triangulation: a simplex S with vertex
matrix edges E has vol(S) = |det E|/n!, and its first moment is
vol(S) * (v_0 + ... + v_n)/(n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DegenerateInputError
from .linalg import RatVec, det_int, vec_add, vec_sub
from .polytope import LatticePolytope, Simplex, triangulate


@dataclass(frozen=True)
class MeasureData:
    volume: Fraction
    moment: RatVec
    barycenter: RatVec


def simplex_volume(s: Simplex) -> Fraction:
    n = len(s.vertices) - 1
    edges = [vec_sub(v, s.vertices[0]) for v in s.vertices[1:]]
    return Fraction(abs(det_int(edges)), factorial(n))


def volume(p: LatticePolytope) -> Fraction:
    return measure_data(p).volume


def moment(p: LatticePolytope) -> RatVec:
    """The integral of the coordinate functions over p, as an exact vector."""
    return measure_data(p).moment


def measure_data(p: LatticePolytope) -> MeasureData:
    if p._measure is None:
        n = p.dim
        vol = Fraction(0)
        mom = [Fraction(0)] * n
        for cell in triangulate(p):
            cell_vol = simplex_volume(cell)
            vol += cell_vol
            vsum = cell.vertices[0]
            for v in cell.vertices[1:]:
                vsum = vec_add(vsum, v)
            scale = cell_vol / (n + 1)
            for k in range(n):
                mom[k] += scale * vsum[k]
        if vol <= 0:
            raise DegenerateInputError("polytope has zero volume")
        bary = tuple(m / vol for m in mom)
        p._measure = MeasureData(vol, tuple(mom), bary)
    return p._measure
