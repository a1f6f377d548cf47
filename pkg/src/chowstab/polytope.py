"""Lattice polytopes: vertex and halfspace representations, faces, triangulation.

Conversions between the two representations are done by exhaustive subset
enumeration with exact solves; at desk scale (dim <= 8, tens of facets) this
is fast, simple, and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from .errors import DegenerateInputError, DimensionMismatchError
from .feasibility import point_in_hull, positively_spans
from .linalg import (
    IntVec,
    RatVec,
    as_intvec,
    dot,
    nullspace,
    primitive,
    rank,
    solve,
    vec_sub,
)


@dataclass(frozen=True)
class Halfspace:
    """Inequality <normal, x> + offset >= 0 with a primitive integer normal."""

    normal: IntVec
    offset: int

    def value_at(self, x: Sequence):
        return dot(self.normal, x) + self.offset


@dataclass(frozen=True)
class HalfspaceRep:
    dim: int
    inequalities: tuple[Halfspace, ...]

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatchError(
                f"point has length {len(x)}, expected {self.dim}"
            )
        return all(h.value_at(x) >= 0 for h in self.inequalities)

    def dilate(self, factor: int) -> "HalfspaceRep":
        if factor <= 0:
            raise ValueError("dilation factor must be a positive integer")
        return HalfspaceRep(
            self.dim,
            tuple(Halfspace(h.normal, factor * h.offset) for h in self.inequalities),
        )

    def translate(self, t: Sequence[int]) -> "HalfspaceRep":
        # P + t satisfies <n, x - t> + c >= 0, so the offset drops by <n, t>
        return HalfspaceRep(
            self.dim,
            tuple(
                Halfspace(h.normal, h.offset - dot(h.normal, t))
                for h in self.inequalities
            ),
        )


@dataclass(frozen=True)
class Simplex:
    """Affinely independent vertex list (n+1 vertices for a full cell)."""

    vertices: tuple[IntVec, ...]


class LatticePolytope:
    """Full-dimensional lattice polytope given by its vertex list.

    Vertices are stored sorted; the facet description and derived data are
    computed lazily and cached.  Instances are immutable.
    """

    def __init__(
        self,
        vertices: Sequence[IntVec],
        facets: HalfspaceRep | None = None,
        name: str | None = None,
    ):
        self._vertices: tuple[IntVec, ...] = tuple(sorted(map(as_intvec, vertices)))
        if not self._vertices:
            raise DegenerateInputError("polytope needs at least one vertex")
        self._dim = len(self._vertices[0])
        if any(len(v) != self._dim for v in self._vertices):
            raise DimensionMismatchError("vertices have mixed lengths")
        self._facets = facets
        self.name = name or f"polytope-{self._dim}d-{len(self._vertices)}v"
        self._tight_masks: tuple[int, ...] | None = None
        self._cells: tuple[Simplex, ...] | None = None
        self._measure = None
        self._dilation_cache: dict[int, object] = {}

    # -- construction -----------------------------------------------------

    @classmethod
    def from_points(
        cls, points: Iterable[Sequence[int]], name: str | None = None
    ) -> "LatticePolytope":
        """Convex hull of an arbitrary lattice point set (non-vertices dropped)."""
        pts = sorted(set(map(as_intvec, points)))
        if not pts:
            raise DegenerateInputError("empty point set")
        n = len(pts[0])
        diffs = [vec_sub(p, pts[0]) for p in pts[1:]]
        if rank(diffs) < n:
            raise DegenerateInputError(
                f"points span an affine subspace of dimension {rank(diffs)} < {n}"
            )
        verts = [
            p
            for k, p in enumerate(pts)
            if not point_in_hull(p, [q for j, q in enumerate(pts) if j != k])
        ]
        return cls(verts, name=name)

    @classmethod
    def from_halfspaces(
        cls,
        inequalities: HalfspaceRep | Iterable[tuple[Sequence[int], int]],
        name: str | None = None,
        require_integral: bool = True,
    ) -> "LatticePolytope":
        if not isinstance(inequalities, HalfspaceRep):
            ineqs = tuple(
                Halfspace(as_intvec(nrm), int(off)) for nrm, off in inequalities
            )
            if not ineqs:
                raise DegenerateInputError("no inequalities given")
            inequalities = HalfspaceRep(len(ineqs[0].normal), ineqs)
        return hrep_to_vrep(inequalities, name=name, require_integral=require_integral)

    # -- basic data --------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def vertices(self) -> tuple[IntVec, ...]:
        return self._vertices

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def facets(self) -> HalfspaceRep:
        if self._facets is None:
            self._facets = vrep_to_hrep(self)
        return self._facets

    def contains(self, x: Sequence) -> bool:
        return self.facets.contains(x)

    def bounding_box(self, factor: int = 1) -> tuple[IntVec, IntVec]:
        lo = tuple(factor * min(v[k] for v in self._vertices) for k in range(self._dim))
        hi = tuple(factor * max(v[k] for v in self._vertices) for k in range(self._dim))
        return lo, hi

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticePolytope)
            and self._dim == other._dim
            and self._vertices == other._vertices
        )

    def __hash__(self) -> int:
        return hash((self._dim, self._vertices))

    def __repr__(self) -> str:
        return f"LatticePolytope(dim={self._dim}, vertices={len(self._vertices)})"

    # -- face incidence ----------------------------------------------------

    def facet_tight_masks(self) -> tuple[int, ...]:
        """Per facet, the bitmask of vertex indices lying on it."""
        if self._tight_masks is None:
            masks = []
            for h in self.facets.inequalities:
                mask = 0
                for idx, v in enumerate(self._vertices):
                    if h.value_at(v) == 0:
                        mask |= 1 << idx
                masks.append(mask)
            self._tight_masks = tuple(masks)
        return self._tight_masks


def dilate(p: LatticePolytope, factor: int) -> LatticePolytope:
    """Scale the polytope by a positive integer; facet normals are unchanged."""
    if factor <= 0:
        raise ValueError("dilation factor must be a positive integer")
    facets = p._facets.dilate(factor) if p._facets is not None else None
    return LatticePolytope(
        [vec_scale_int(v, factor) for v in p.vertices],
        facets=facets,
        name=f"{p.name}*{factor}",
    )


def translate(p: LatticePolytope, t: Sequence[int]) -> LatticePolytope:
    if len(t) != p.dim:
        raise DimensionMismatchError("translation vector has wrong length")
    tt = as_intvec(t)
    facets = p._facets.translate(tt) if p._facets is not None else None
    return LatticePolytope(
        [tuple(a + b for a, b in zip(v, tt)) for v in p.vertices],
        facets=facets,
        name=f"{p.name}+{tt}",
    )


def vec_scale_int(v: IntVec, c: int) -> IntVec:
    return tuple(c * a for a in v)


def vrep_to_hrep(p: LatticePolytope) -> HalfspaceRep:
    """Irredundant primitive-normal facet list of a full-dimensional polytope.

    Every n-subset of vertices spanning a hyperplane is tried; a hyperplane
    supports a facet iff all vertices lie weakly on one side.
    """
    verts = p.vertices
    n = p.dim
    diffs_all = [vec_sub(v, verts[0]) for v in verts[1:]]
    if rank(diffs_all) < n:
        raise DegenerateInputError("polytope is not full-dimensional")
    found: set[tuple[IntVec, int]] = set()
    for subset in combinations(verts, n):
        diffs = [vec_sub(q, subset[0]) for q in subset[1:]]
        kernel = nullspace(diffs, ncols=n) if diffs else nullspace([], ncols=n)
        if len(kernel) != 1:
            continue
        normal = _integral_direction(kernel[0])
        offset = -dot(normal, subset[0])
        values = [dot(normal, v) + offset for v in verts]
        if all(val >= 0 for val in values):
            found.add((normal, offset))
        elif all(val <= 0 for val in values):
            found.add((tuple(-a for a in normal), -offset))
    ineqs = tuple(Halfspace(nrm, off) for nrm, off in sorted(found))
    return HalfspaceRep(n, ineqs)


def _integral_direction(v: RatVec) -> IntVec:
    scale = lcm(*(f.denominator for f in v))
    return primitive(tuple(int(f * scale) for f in v))


def hrep_to_vrep(
    h: HalfspaceRep, name: str | None = None, require_integral: bool = True
) -> LatticePolytope:
    """Exact vertex enumeration of a bounded full-dimensional halfspace system.

    Solves every n-subset of facet equalities and keeps feasible solutions.
    """
    n = h.dim
    normals = [ineq.normal for ineq in h.inequalities]
    if rank(normals) < n:
        raise DegenerateInputError("halfspace normals do not span; solution set is unbounded or flat")
    if not positively_spans(normals, n):
        raise DegenerateInputError("halfspace system is unbounded")
    vertices: set[tuple] = set()
    for subset in combinations(h.inequalities, n):
        a = [ineq.normal for ineq in subset]
        b = [-ineq.offset for ineq in subset]
        x = solve(a, b)
        if x is None:
            continue
        if h.contains(x):
            vertices.add(x)
    if not vertices:
        raise DegenerateInputError("halfspace system has empty solution set")
    if require_integral:
        bad = [v for v in vertices if any(f.denominator != 1 for f in v)]
        if bad:
            raise DegenerateInputError(
                f"vertex {bad[0]} is not integral; not a lattice polytope"
            )
        verts = sorted(tuple(int(f) for f in v) for v in vertices)
    else:
        verts = sorted(vertices)
    diffs = [vec_sub(v, verts[0]) for v in verts[1:]]
    if rank(diffs) < n:
        raise DegenerateInputError("solution set is not full-dimensional")
    canonical = _canonical_facets(h, verts, n)
    poly = LatticePolytope(verts, facets=canonical, name=name)
    return poly


def _canonical_facets(h: HalfspaceRep, verts, n: int) -> HalfspaceRep:
    """Drop redundant inequalities: keep those tight on a (n-1)-dimensional set."""
    kept: set[tuple[IntVec, int]] = set()
    for ineq in h.inequalities:
        tight = [v for v in verts if ineq.value_at(v) == 0]
        if not tight:
            continue
        diffs = [vec_sub(v, tight[0]) for v in tight[1:]]
        if rank(diffs) == n - 1:
            kept.add((ineq.normal, ineq.offset))
    return HalfspaceRep(n, tuple(Halfspace(nrm, off) for nrm, off in sorted(kept)))


def contains(h: HalfspaceRep, x: Sequence) -> bool:
    return h.contains(x)


def vertex_edge_directions(p: LatticePolytope, vertex_index: int) -> tuple[IntVec, ...]:
    """Primitive directions of all edges incident to a vertex, pointing away.

    Edges are read off facet incidence: two vertices span an edge iff the
    smallest face containing both (vertices tight on every common facet)
    has exactly two vertices.
    """
    verts = p.vertices
    w = verts[vertex_index]
    if p.dim == 1:
        (other,) = [v for v in verts if v != w]
        return (primitive(vec_sub(other, w)),)
    masks = p.facet_tight_masks()
    dirs = []
    for j, u in enumerate(verts):
        if j == vertex_index:
            continue
        both = [m for m in masks if (m >> vertex_index) & 1 and (m >> j) & 1]
        if not both:
            continue
        common = both[0]
        for m in both[1:]:
            common &= m
        if common.bit_count() == 2:
            dirs.append(primitive(vec_sub(u, w)))
    return tuple(sorted(dirs))


def triangulate(
    p: LatticePolytope, apex: Sequence[int] | None = None
) -> tuple[Simplex, ...]:
    """Star triangulation into simplices spanned by vertices of p.

    The apex defaults to the lexicographically smallest vertex; each facet
    not containing the apex is triangulated recursively by the same rule and
    coned.  The result is deterministic.
    """
    verts = p.vertices
    n = p.dim
    if apex is None:
        apex_idx = 0  # vertices are stored sorted
    else:
        apex_idx = verts.index(as_intvec(apex))
    masks = p.facet_tight_masks()
    all_mask = (1 << len(verts)) - 1
    dim_cache: dict[int, int] = {}

    def face_dim(mask: int) -> int:
        if mask not in dim_cache:
            members = [verts[i] for i in _bits(mask)]
            diffs = [vec_sub(v, members[0]) for v in members[1:]]
            dim_cache[mask] = rank(diffs) if diffs else 0
        return dim_cache[mask]

    def tri(mask: int, fdim: int, apex_i: int | None) -> list[tuple[int, ...]]:
        members = _bits(mask)
        if len(members) == fdim + 1:
            return [tuple(members)]
        a = apex_i if apex_i is not None else min(members, key=lambda i: verts[i])
        cells: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for fmask in masks:
            sub = mask & fmask
            if sub == mask or sub in seen or sub == 0:
                continue
            seen.add(sub)
            if (sub >> a) & 1:
                continue
            if face_dim(sub) == fdim - 1:
                for cell in tri(sub, fdim - 1, None):
                    cells.append(cell + (a,))
        return cells

    index_cells = tri(all_mask, n, apex_idx)
    return tuple(
        Simplex(tuple(verts[i] for i in sorted(cell))) for cell in index_cells
    )


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out
