"""Delzant (smoothness) and reflexivity tests for lattice polytopes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import IntVec, det_int
from .polytope import LatticePolytope, vertex_edge_directions


@dataclass(frozen=True)
class DelzantFailure:
    vertex: IntVec
    reason: str  # "wrong-edge-count" or "not-unimodular"
    edge_directions: tuple[IntVec, ...]
    determinant: int | None = None


@dataclass(frozen=True)
class DelzantVerdict:
    is_delzant: bool
    failures: tuple[DelzantFailure, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.is_delzant


def is_delzant(p: LatticePolytope) -> DelzantVerdict:
    """Check that every vertex has n edges whose primitive directions form a lattice basis."""
    n = p.dim
    failures = []
    for idx in range(p.n_vertices):
        dirs = vertex_edge_directions(p, idx)
        if len(dirs) != n:
            failures.append(
                DelzantFailure(p.vertices[idx], "wrong-edge-count", dirs)
            )
            continue
        det = det_int(dirs)
        if abs(det) != 1:
            failures.append(
                DelzantFailure(p.vertices[idx], "not-unimodular", dirs, det)
            )
    return DelzantVerdict(not failures, tuple(failures))


def is_reflexive(p: LatticePolytope) -> bool:
    """True iff the origin is strictly interior and every facet offset equals 1.

    Convention: facets are <normal, x> + offset >= 0 with primitive normals,
    so reflexivity reads "<normal, x> >= -1 with equality on the facet".
    """
    origin = (0,) * p.dim
    facets = p.facets.inequalities
    if any(h.value_at(origin) <= 0 for h in facets):
        return False
    return all(h.offset == 1 for h in facets)
