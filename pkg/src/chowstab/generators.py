"""Built-in polytope families used by the command line and the test suite."""

from __future__ import annotations

from itertools import product

from .polytope import Halfspace, HalfspaceRep, LatticePolytope

# Facet normals of the 7-dimensional reflexive example of Nill & Paffenholz,
# one inner normal per column of the published matrix; every facet sits at
# lattice distance 1 (offset 1 in the <v, x> + 1 >= 0 convention).
NILL_PAFFENHOLZ_NORMALS: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0),
    (0, 0, -1, 0, 0, 0, -1),
    (0, -1, 0, 0, 0, 0, -1),
    (-1, 0, 0, 0, 0, 0, -1),
    (0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, -1, -1, -1, 2),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, -1),
)


def hirzebruch(k: int) -> LatticePolytope:
    """Trapezoid whose toric surface is the (k-1)-th Hirzebruch surface."""
    if k < 2:
        raise ValueError("hirzebruch generator needs k >= 2")
    return LatticePolytope(
        [(0, 0), (0, 1), (1, 1), (k, 0)], name=f"hirzebruch-{k}"
    )


def simplex(n: int) -> LatticePolytope:
    if n < 1:
        raise ValueError("dimension must be >= 1")
    verts = [(0,) * n] + [
        tuple(int(i == j) for j in range(n)) for i in range(n)
    ]
    return LatticePolytope(verts, name=f"simplex-{n}")


def cube(n: int) -> LatticePolytope:
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return LatticePolytope(list(product((0, 1), repeat=n)), name=f"cube-{n}")


def cross(n: int) -> LatticePolytope:
    """Convex hull of the signed standard basis vectors (reflexive)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    verts = []
    for i in range(n):
        for sign in (1, -1):
            verts.append(tuple(sign * int(i == j) for j in range(n)))
    return LatticePolytope(verts, name=f"cross-{n}")


def segment(a: int, b: int) -> LatticePolytope:
    if a >= b:
        raise ValueError("segment needs a < b")
    return LatticePolytope([(a,), (b,)], name=f"segment-{a}-{b}")


def nill_paffenholz() -> LatticePolytope:
    rep = HalfspaceRep(
        7, tuple(Halfspace(nrm, 1) for nrm in NILL_PAFFENHOLZ_NORMALS)
    )
    return LatticePolytope.from_halfspaces(rep, name="nill-paffenholz")


_GENERATORS = {
    "hirzebruch": (hirzebruch, 1),
    "simplex": (simplex, 1),
    "cube": (cube, 1),
    "cross": (cross, 1),
    "segment": (segment, 2),
    "nill-paffenholz": (nill_paffenholz, 0),
}


def generate(name: str, args: list[int] | None = None) -> LatticePolytope:
    """Build a named polytope; used by the --gen command line flag."""
    args = args or []
    if name not in _GENERATORS:
        known = ", ".join(sorted(_GENERATORS))
        raise ValueError(f"unknown generator {name!r} (known: {known})")
    fn, arity = _GENERATORS[name]
    if len(args) != arity:
        raise ValueError(
            f"generator {name!r} takes {arity} integer argument(s), got {len(args)}"
        )
    return fn(*args)
