"""Exact convex-hull membership tests (rational linear feasibility).

Two interchangeable deciders are provided: an exhaustive barycentric search
over affinely independent subsets (Caratheodory) for small point sets, and a
phase-I simplex with Bland's rule for larger ones.  Both are exact.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import as_ratvec, rank, solve_rectangular, vec_sub

BRUTE_FORCE_LIMIT = 10


def origin_in_hull_bruteforce(points: Sequence[Sequence]) -> bool:
    """Decide 0 in conv(points) by barycentric search over small subsets.

    By Caratheodory's theorem it suffices to scan affinely independent
    subsets of at most dim+1 points.
    """
    pts = [as_ratvec(p) for p in points]
    if not pts:
        return False
    m = len(pts[0])
    for size in range(1, m + 2):
        for subset in combinations(pts, size):
            diffs = [vec_sub(q, subset[0]) for q in subset[1:]]
            if diffs and rank(diffs) != size - 1:
                continue
            # barycentric coordinates: sum(l_j p_j) = 0, sum(l_j) = 1
            rows = [[p[c] for p in subset] for c in range(m)]
            rows.append([Fraction(1)] * size)
            rhs = [Fraction(0)] * m + [Fraction(1)]
            part, _ = solve_rectangular(rows, rhs)
            if part is not None and all(l >= 0 for l in part):
                return True
    return False


def _phase_one_feasible(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Exact feasibility of {x >= 0 : A x = b} via phase-I simplex, Bland's rule."""
    m = len(rows)
    k = len(rows[0]) if m else 0
    tab = []
    for row, b in zip(rows, rhs):
        if b < 0:
            row = [-e for e in row]
            b = -b
        tab.append([Fraction(e) for e in row] + [b])
    ncols = k + m
    # append artificial identity columns
    for i, row in enumerate(tab):
        art = [Fraction(int(j == i)) for j in range(m)]
        tab[i] = row[:k] + art + [row[k]]
    basis = list(range(k, k + m))
    # objective: minimize sum of artificials; reduced costs start as the
    # negated column sums of the constraint rows
    cost = [Fraction(0)] * (ncols + 1)
    for j in range(ncols + 1):
        s = sum(tab[i][j] for i in range(m))
        cost[j] = -s
    for j in range(k, k + m):
        cost[j] += Fraction(1)

    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        best_i = None
        best_ratio = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][ncols] / tab[i][enter]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_i])
                ):
                    best_ratio = ratio
                    best_i = i
        if best_i is None:
            # phase-I objective is bounded below by 0; unbounded column
            # cannot happen, guard anyway
            break
        piv = tab[best_i][enter]
        tab[best_i] = [e / piv for e in tab[best_i]]
        for i in range(m):
            if i != best_i and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [e - f * pe for e, pe in zip(tab[i], tab[best_i])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [e - f * pe for e, pe in zip(cost, tab[best_i] + [])]
        basis[best_i] = enter

    objective = -cost[ncols]
    return objective == 0


def origin_in_hull_simplex(points: Sequence[Sequence]) -> bool:
    """Decide 0 in conv(points) as exact LP feasibility."""
    pts = [as_ratvec(p) for p in points]
    if not pts:
        return False
    m = len(pts[0])
    rows = [[p[c] for p in pts] for c in range(m)]
    rows.append([Fraction(1)] * len(pts))
    rhs = [Fraction(0)] * m + [Fraction(1)]
    return _phase_one_feasible(rows, rhs)


def origin_in_hull(points: Sequence[Sequence]) -> bool:
    if len(points) <= BRUTE_FORCE_LIMIT:
        return origin_in_hull_bruteforce(points)
    return origin_in_hull_simplex(points)


def point_in_hull(x: Sequence, points: Sequence[Sequence]) -> bool:
    xr = as_ratvec(x)
    return origin_in_hull([vec_sub(as_ratvec(p), xr) for p in points])


def positively_spans(vectors: Sequence[Sequence], dim: int) -> bool:
    """True iff the vectors positively span R^dim, i.e. {d : <v,d> >= 0 for all v} = {0}.

    Criterion: full rank plus a strictly positive combination summing to zero
    (checked as feasibility of sum((1+u_j) v_j) = 0 with u >= 0).
    """
    vecs = [as_ratvec(v) for v in vectors]
    if rank(vecs) < dim:
        return False
    rows = [[v[c] for v in vecs] for c in range(dim)]
    rhs = [-sum(v[c] for v in vecs) for c in range(dim)]
    return _phase_one_feasible(rows, rhs)
