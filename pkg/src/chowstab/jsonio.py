"""JSON serialization helpers.

Conventions: rationals serialize as "p/q" (or "p" when the denominator is
one); all integers -- including dimensions and counts -- serialize as decimal
strings so consumers never face 64-bit overflow.  Dumped objects use sorted
keys to keep reports byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .delzant import DelzantVerdict
from .git_weights import AffineHull, DiagonalResult, WeightSet
from .hilbert import HilbertTruncation
from .measure import MeasureData
from .obstruction import ObstructionReport
from .polytope import Halfspace, HalfspaceRep, LatticePolytope


def rat_to_str(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s)


def int_to_str(x: int) -> str:
    return str(int(x))


def vec_to_json(v: Sequence) -> list[str]:
    return [rat_to_str(x) for x in v]


def intvec_from_json(entries: Sequence[str]) -> tuple[int, ...]:
    return tuple(int(e) for e in entries)


def polytope_to_dict(p: LatticePolytope, include_facets: bool = True) -> dict:
    out = {
        "dim": int_to_str(p.dim),
        "vertices": [vec_to_json(v) for v in p.vertices],
    }
    if include_facets:
        out["facets"] = [
            {"normal": vec_to_json(h.normal), "offset": int_to_str(h.offset)}
            for h in p.facets.inequalities
        ]
    return out


def polytope_from_dict(data: dict, name: str | None = None) -> LatticePolytope:
    """Rebuild a polytope from its JSON form; either key may be absent."""
    if "vertices" in data and data["vertices"]:
        return LatticePolytope.from_points(
            [intvec_from_json(v) for v in data["vertices"]], name=name
        )
    if "facets" in data and data["facets"]:
        dim = int(data["dim"])
        ineqs = tuple(
            Halfspace(intvec_from_json(f["normal"]), int(f["offset"]))
            for f in data["facets"]
        )
        return LatticePolytope.from_halfspaces(HalfspaceRep(dim, ineqs), name=name)
    raise ValueError("polytope JSON needs 'vertices' or 'facets'")


def measure_to_dict(md: MeasureData) -> dict:
    return {
        "volume": rat_to_str(md.volume),
        "moment": vec_to_json(md.moment),
        "barycenter": vec_to_json(md.barycenter),
    }


def delzant_to_dict(v: DelzantVerdict) -> dict:
    return {
        "is_delzant": v.is_delzant,
        "failures": [
            {
                "vertex": vec_to_json(f.vertex),
                "reason": f.reason,
                "edge_directions": [vec_to_json(d) for d in f.edge_directions],
                "determinant": None if f.determinant is None else int_to_str(f.determinant),
            }
            for f in v.failures
        ],
    }


def obstruction_to_dict(rep: ObstructionReport) -> dict:
    return {
        "polytope": rep.polytope,
        "dim": int_to_str(rep.dim),
        "volume": rat_to_str(rep.volume),
        "moment": vec_to_json(rep.moment),
        "levels": {
            str(i): {
                "count": int_to_str(rep.per_level_data[i][0]),
                "sum": vec_to_json(rep.per_level_data[i][1]),
                "residual": vec_to_json(rep.per_level_residuals[i]),
            }
            for i in sorted(rep.per_level_residuals)
        },
        "verdict": rep.verdict,
        "failing_levels": [int_to_str(i) for i in rep.failing_levels],
        "vectors": None
        if rep.vectors is None
        else [vec_to_json(v) for v in rep.vectors],
        "span_rank": None if rep.span_rank is None else int_to_str(rep.span_rank),
        "reflexive": rep.reflexive,
        "delzant": rep.delzant,
        "complete": rep.complete,
    }


def hilbert_to_dict(trunc: HilbertTruncation, first_fail: int | None) -> dict:
    return {
        "order": int_to_str(trunc.order),
        "derivative_series": [vec_to_json(s) for s in trunc.sum_series],
        "expected_series": [vec_to_json(s) for s in trunc.expected_series],
        "counts": [int_to_str(d.count) for d in trunc.per_degree],
        "first_failing_degree": None if first_fail is None else int_to_str(first_fail),
    }


def weights_from_dict(data: dict) -> WeightSet:
    return WeightSet.of([intvec_from_json(w) for w in data["weights"]])


def diagonal_to_dict(res: DiagonalResult) -> dict:
    return {
        "kind": res.kind,
        "t": None if res.t is None else rat_to_str(res.t),
    }


def affine_hull_to_dict(hull: AffineHull) -> dict:
    return {
        "ambient_dim": int_to_str(hull.ambient_dim),
        "dim": int_to_str(hull.dim),
        "equations": [
            {"coefficients": vec_to_json(c), "value": rat_to_str(v)}
            for c, v in hull.equations
        ],
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
