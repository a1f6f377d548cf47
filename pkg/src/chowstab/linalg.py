"""Exact rational linear algebra and lattice-vector primitives.

Vectors are tuples of ``int`` (lattice vectors) or ``fractions.Fraction``
(rational vectors); matrices are sequences of row vectors.  Every operation
is exact -- there is no floating point anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatchError

Rational = Fraction
IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def as_intvec(entries: Iterable) -> IntVec:
    return tuple(int(e) for e in entries)


def as_ratvec(entries: Iterable) -> RatVec:
    return tuple(Fraction(e) for e in entries)


def zero_vec(n: int) -> RatVec:
    return (Fraction(0),) * n


def _check_same_length(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths differ: {len(u)} vs {len(v)}")


def vec_add(u: Sequence, v: Sequence) -> tuple:
    _check_same_length(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    _check_same_length(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(v: Sequence, c) -> tuple:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    _check_same_length(u, v)
    return sum(a * b for a, b in zip(u, v))


def is_zero_vec(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Sequence[int]) -> IntVec:
    """Divide a nonzero integer vector by the (positive) gcd of its entries.

    The direction of the vector is preserved: primitive((0, -3)) == (0, -1).
    """
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    if g == 0:
        raise ValueError("primitive() of the zero vector is undefined")
    return tuple(a // g for a in v)


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(rows)
    a = [list(map(int, r)) for r in rows]
    for r in a:
        if len(r) != n:
            raise DimensionMismatchError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n > 0 else 1


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant; integer matrices take the fraction-free path."""
    if all(isinstance(e, int) for r in rows for e in r):
        return Fraction(det_int(rows))
    n = len(rows)
    a = [[Fraction(e) for e in r] for r in rows]
    for r in a:
        if len(r) != n:
            raise DimensionMismatchError("determinant requires a square matrix")
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                factor = a[i][k] * inv
                for j in range(k, n):
                    a[i][j] -= factor * a[k][j]
    return det


def solve(a: Sequence[Sequence], b: Sequence) -> RatVec | None:
    """Solve the square system a·x = b exactly; ``None`` when a is singular."""
    n = len(a)
    if len(b) != n:
        raise DimensionMismatchError("right-hand side length does not match matrix")
    m = [[Fraction(e) for e in row] + [Fraction(be)] for row, be in zip(a, b)]
    for row in m:
        if len(row) != n + 1:
            raise DimensionMismatchError("solve requires a square matrix")
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            return None
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
        inv = 1 / m[k][k]
        m[k] = [e * inv for e in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                factor = m[i][k]
                m[i] = [e - factor * pe for e, pe in zip(m[i], m[k])]
    return tuple(m[i][n] for i in range(n))


def _rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [[Fraction(e) for e in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [e - factor * pe for e, pe in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank by Gauss-Jordan elimination."""
    _, pivots = _rref(rows)
    return len(pivots)


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[RatVec]:
    """Basis of the right kernel {x : rows·x = 0}, exact.

    ``ncols`` must be given when ``rows`` is empty.
    """
    if not rows:
        if ncols is None:
            raise DimensionMismatchError("nullspace of empty matrix needs ncols")
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = _rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -m[r][f]
        basis.append(tuple(vec))
    return basis


def solve_rectangular(
    a: Sequence[Sequence], b: Sequence
) -> tuple[RatVec | None, list[RatVec]]:
    """General exact solve of a·x = b.

    Returns (particular solution or None when inconsistent, kernel basis of a).
    """
    if not a:
        raise DimensionMismatchError("empty system")
    ncols = len(a[0])
    aug = [list(row) + [be] for row, be in zip(a, b)]
    m, pivots = _rref(aug)
    if ncols in pivots:
        return None, nullspace(a)
    particular = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        particular[c] = m[r][ncols]
    return tuple(particular), nullspace(a)
