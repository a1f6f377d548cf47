"""Command-line front end.

Exit codes: 0 = computation succeeded (whatever the verdict), 1 = usage or
input error, 2 = internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio
from .delzant import is_delzant, is_reflexive
from .ehrhart import (
    ehrhart_polynomial,
    polygon_closed_forms,
    reciprocity_check,
    sum_polynomial,
)
from .errors import ChowstabError, InternalConsistencyError
from .generators import generate
from .git_weights import (
    chow_weight_affine_hull,
    diagonal_in_affine_hull,
    is_torus_semistable,
    project_to_subtorus,
)
from .hilbert import derivative_series, semistable_series_check
from .lattice_points import count_and_sum, enumerate_points
from .measure import measure_data
from .obstruction import check_point_configuration, verdict
from .polytope import LatticePolytope


def _add_source_args(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--gen",
        nargs="+",
        metavar=("NAME", "ARG"),
        help="generator name plus integer arguments "
        "(hirzebruch K | simplex N | cube N | cross N | segment A B | nill-paffenholz)",
    )
    group.add_argument("--file", help="polytope JSON file")


def _add_common_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("CHOWSTAB_JOBS", "1")),
        help="parallel workers for lattice point scans (env CHOWSTAB_JOBS)",
    )


def _load_polytope(args) -> LatticePolytope:
    if args.gen:
        name = args.gen[0]
        try:
            gen_args = [int(a) for a in args.gen[1:]]
        except ValueError:
            raise ValueError(f"generator arguments must be integers: {args.gen[1:]}")
        return generate(name, gen_args)
    with open(args.file, encoding="utf-8") as fh:
        data = json.load(fh)
    return jsonio.polytope_from_dict(data, name=os.path.basename(args.file))


def _print_residual_table(rep) -> None:
    print(f"polytope: {rep.polytope} (dim {rep.dim})")
    print(f"delzant: {rep.delzant}    reflexive: {rep.reflexive}")
    print(f"vol = {jsonio.rat_to_str(rep.volume)}")
    print(f"moment = ({', '.join(jsonio.vec_to_json(rep.moment))})")
    print(f"{'i':>4} | {'E(i)':>12} | {'s(i)':>28} | residual")
    for i in sorted(rep.per_level_residuals):
        count, ssum = rep.per_level_data[i]
        svec = "(" + ", ".join(str(c) for c in ssum) + ")"
        rvec = "(" + ", ".join(jsonio.vec_to_json(rep.per_level_residuals[i])) + ")"
        print(f"{i:>4} | {count:>12} | {svec:>28} | {rvec}")
    if rep.vectors is not None:
        for j, vec in enumerate(rep.vectors, start=1):
            print(f"obstruction vector j={j}: ({', '.join(jsonio.vec_to_json(vec))})")
        print(f"span rank: {rep.span_rank}")
    if rep.complete and not rep.failing_levels:
        print("levels 1..n+1 all vanish; the obstruction vanishes for every level")
    if rep.failing_levels:
        print(f"verdict: {rep.verdict} levels {list(rep.failing_levels)}")
    else:
        print(f"verdict: {rep.verdict}")


def _cmd_check(args) -> int:
    p = _load_polytope(args)
    rep = verdict(
        p,
        i_max=args.i_max,
        require_delzant=not args.allow_non_delzant,
        stop_at_first_failure=args.stop_at_first_failure,
        jobs=args.jobs,
    )
    if args.format == "json":
        print(jsonio.dumps(jsonio.obstruction_to_dict(rep)))
    else:
        _print_residual_table(rep)
    return 0


def _cmd_ehrhart(args) -> int:
    p = _load_polytope(args)
    count_poly = ehrhart_polynomial(p)
    sum_poly = sum_polynomial(p)
    out = {
        "polytope": p.name,
        "count_polynomial": jsonio.vec_to_json(count_poly.coefficients),
        "sum_polynomial": [jsonio.vec_to_json(c) for c in sum_poly.coefficients],
    }
    if p.dim == 2:
        closed_e, closed_s = polygon_closed_forms(p)
        out["closed_forms_match"] = (
            closed_e == count_poly and closed_s == sum_poly
        )
    if args.reciprocity:
        out["reciprocity_ok"] = reciprocity_check(count_poly, p)
    if args.format == "json":
        print(jsonio.dumps(out))
    else:
        print(f"polytope: {p.name}")
        print(f"count polynomial (low degree first): {out['count_polynomial']}")
        print(f"sum polynomial coefficients t^1..t^(n+1): {out['sum_polynomial']}")
        for key in ("closed_forms_match", "reciprocity_ok"):
            if key in out:
                print(f"{key}: {out[key]}")
    return 0


def _cmd_measure(args) -> int:
    p = _load_polytope(args)
    md = measure_data(p)
    if args.format == "json":
        print(jsonio.dumps({"polytope": p.name, **jsonio.measure_to_dict(md)}))
    else:
        print(f"polytope: {p.name}")
        print(f"volume = {jsonio.rat_to_str(md.volume)}")
        print(f"moment = ({', '.join(jsonio.vec_to_json(md.moment))})")
        print(f"barycenter = ({', '.join(jsonio.vec_to_json(md.barycenter))})")
    return 0


def _cmd_hilbert(args) -> int:
    p = _load_polytope(args)
    trunc = derivative_series(p, args.order)
    check = semistable_series_check(p, args.order)
    first_fail = check.first_failing_degree
    if args.format == "json":
        out = jsonio.hilbert_to_dict(trunc, first_fail)
        out["polytope"] = p.name
        out["reflexive"] = check.reflexive
        if check.reflexive:
            out["first_nonzero_degree"] = (
                None
                if check.first_nonzero_degree is None
                else str(check.first_nonzero_degree)
            )
        print(jsonio.dumps(out))
    else:
        print(f"polytope: {p.name} (order {args.order})")
        for i, (s, e) in enumerate(zip(trunc.sum_series, trunc.expected_series), 1):
            print(
                f"degree {i}: s = ({', '.join(str(c) for c in s)})"
                f"  expected ({', '.join(jsonio.vec_to_json(e))})"
            )
        if check.ok:
            print("series comparison: all degrees match")
        else:
            print(f"series comparison: first failing degree {first_fail}")
            if check.reflexive and check.first_nonzero_degree is not None:
                print(
                    f"reflexive strong check: first nonzero degree "
                    f"{check.first_nonzero_degree}"
                )
    return 0


def _cmd_delzant(args) -> int:
    p = _load_polytope(args)
    v = is_delzant(p)
    if args.format == "json":
        print(jsonio.dumps({"polytope": p.name, **jsonio.delzant_to_dict(v)}))
    else:
        print(f"polytope: {p.name}")
        print(f"delzant: {v.is_delzant}")
        for f in v.failures:
            print(f"  vertex {f.vertex}: {f.reason}, edges {f.edge_directions}")
    return 0


def _cmd_reflexive(args) -> int:
    p = _load_polytope(args)
    result = is_reflexive(p)
    if args.format == "json":
        print(jsonio.dumps({"polytope": p.name, "reflexive": result}))
    else:
        print(f"polytope: {p.name}")
        print(f"reflexive: {result}")
    return 0


def _cmd_weights(args) -> int:
    with open(args.weights_file, encoding="utf-8") as fh:
        w = jsonio.weights_from_dict(json.load(fh))
    semistable = is_torus_semistable(w)
    diag = diagonal_in_affine_hull(w)
    out = {
        "ambient_dim": str(w.ambient_dim),
        "weights": [jsonio.vec_to_json(x) for x in w.weights],
        "torus_semistable": semistable,
        "diagonal": jsonio.diagonal_to_dict(diag),
    }
    if w.ambient_dim >= 2:
        out["projected_weights"] = [
            jsonio.vec_to_json(x) for x in project_to_subtorus(w).weights
        ]
    if args.format == "json":
        print(jsonio.dumps(out))
    else:
        print(f"weights ({w.ambient_dim}d): {list(w.weights)}")
        print(f"torus semistable (origin in hull): {semistable}")
        if "projected_weights" in out:
            print(f"projection to determinant-one subtorus: {out['projected_weights']}")
        print(f"diagonal in affine hull: {jsonio.diagonal_to_dict(diag)}")
    return 0


def _cmd_points(args) -> int:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
        pts = [jsonio.intvec_from_json(q) for q in data["points"]]
        residual = check_point_configuration(pts)
        hull = chow_weight_affine_hull(pts)
        diag = hull.diagonal()
        out = {
            "n_points": str(len(pts)),
            "residual": jsonio.vec_to_json(residual),
            "residual_zero": all(r == 0 for r in residual),
            "affine_hull": jsonio.affine_hull_to_dict(hull),
            "diagonal": jsonio.diagonal_to_dict(diag),
        }
        if args.format == "json":
            print(jsonio.dumps(out))
        else:
            print(f"{len(pts)} points; residual = ({', '.join(out['residual'])})")
            print(f"necessary condition holds: {out['residual_zero']}")
            print(f"affine hull dimension: {hull.dim}")
            print(f"diagonal: {jsonio.diagonal_to_dict(diag)}")
        return 0
    p = _load_polytope(args)
    data = count_and_sum(p, args.level, jobs=args.jobs)
    if data.count > args.dump_points:
        raise ValueError(
            f"{data.count} points exceed the --dump-points limit {args.dump_points}"
        )
    for pt in enumerate_points(p, args.level):
        print(json.dumps([str(c) for c in pt]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowstab",
        description="Exact lattice-polytope computations for Chow semistability "
        "obstructions of polarized toric manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="evaluate the obstruction and classify")
    _add_source_args(check)
    _add_common_args(check)
    check.add_argument("--i-max", type=int, default=None, help="highest level to test")
    check.add_argument(
        "--stop-at-first-failure",
        action="store_true",
        help="stop scanning once a nonzero residual settles the verdict",
    )
    check.add_argument(
        "--allow-non-delzant",
        action="store_true",
        help="evaluate the residuals even when the polytope is not Delzant",
    )
    check.set_defaults(func=_cmd_check)

    ehr = sub.add_parser("ehrhart", help="count and sum polynomials")
    _add_source_args(ehr)
    _add_common_args(ehr)
    ehr.add_argument(
        "--reciprocity",
        action="store_true",
        help="also run the interior-point reciprocity sanity check",
    )
    ehr.set_defaults(func=_cmd_ehrhart)

    meas = sub.add_parser("measure", help="exact volume, moment and barycenter")
    _add_source_args(meas)
    _add_common_args(meas)
    meas.set_defaults(func=_cmd_measure)

    hil = sub.add_parser("hilbert", help="derivative series of the graded cone")
    _add_source_args(hil)
    _add_common_args(hil)
    hil.add_argument("--order", type=int, required=True, help="truncation order")
    hil.set_defaults(func=_cmd_hilbert)

    dz = sub.add_parser("delzant", help="smoothness test")
    _add_source_args(dz)
    _add_common_args(dz)
    dz.set_defaults(func=_cmd_delzant)

    refl = sub.add_parser("reflexive", help="reflexivity test")
    _add_source_args(refl)
    _add_common_args(refl)
    refl.set_defaults(func=_cmd_reflexive)

    wt = sub.add_parser("weights", help="weight-set semistability toolkit")
    wt.add_argument("--weights-file", required=True, help="JSON weight list")
    _add_common_args(wt)
    wt.set_defaults(func=_cmd_weights)

    pts = sub.add_parser(
        "points", help="dump lattice points, or check a point configuration"
    )
    source = pts.add_mutually_exclusive_group(required=True)
    source.add_argument("--gen", nargs="+", metavar=("NAME", "ARG"))
    source.add_argument("--file", help="polytope JSON file")
    source.add_argument("--config", help="point-configuration JSON file")
    _add_common_args(pts)
    pts.add_argument("--level", type=int, default=1, help="dilation level to dump")
    pts.add_argument(
        "--dump-points",
        type=int,
        default=10000,
        help="refuse to dump more points than this",
    )
    pts.set_defaults(func=_cmd_points)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion failure: {exc}", file=sys.stderr)
        return 2
    except (ChowstabError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
