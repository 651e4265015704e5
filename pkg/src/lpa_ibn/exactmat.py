"""Exact integer/rational linear algebra on nested tuples of Python ints.

Nothing here touches floating point.  Matrices are row-major sequences of
sequences; results come back as tuples of tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def _check_rect(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    cols = len(m[0])
    if any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")
    return cols


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if _check_rect(a) != len(b):
        raise ValueError("dimension mismatch in product")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def vec_mat(v: Sequence[int], a: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row vector times matrix."""
    if len(v) != len(a):
        raise ValueError("dimension mismatch in vector product")
    cols = _check_rect(a)
    out = [0] * cols
    for x, row in zip(v, a):
        if x:
            for j, y in enumerate(row):
                out[j] += x * y
    return tuple(out)


def mat_pow(a: Sequence[Sequence[int]], k: int) -> Matrix:
    """Exact k-th power by repeated squaring; ``k = 0`` gives the identity."""
    n = len(a)
    if _check_rect(a) != n:
        raise ValueError("mat_pow needs a square matrix")
    if k < 0:
        raise ValueError("negative exponent")
    result = identity(n)
    base = tuple(tuple(int(x) for x in row) for row in a)
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def rank_q(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Pivot: topmost row with a nonzero entry in the leftmost unfinished column.
    Every intermediate entry is a minor of ``m``, so the divisions are exact.
    """
    cols = _check_rect(m)
    rows = [[int(x) for x in row] for row in m]
    nrows = len(rows)
    r = 0
    prev = 1
    for c in range(cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, cols):
                ri[j] = (p * ri[j] - f * rows[r][j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r


def rank_rational(m: Sequence[Sequence[int]]) -> int:
    """Plain Gaussian elimination over Fractions; kept as an independent cross-check."""
    _check_rect(m)
    rows = [[Fraction(x) for x in row] for row in m]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def solve_in_rowspan(
    m: Sequence[Sequence[int]], target: Sequence[int | Fraction]
) -> tuple[Fraction, ...] | None:
    """Coefficients ``lam`` with ``sum(lam[i] * m[i]) == target``, or ``None``.

    Solves ``m^T lam = target`` by fraction-free forward elimination on the
    augmented system (pivot: topmost row, leftmost column), then back-substitution
    with free coefficients set to zero.  The answer is therefore deterministic.
    """
    cols = _check_rect(m)
    if len(target) != cols:
        raise ValueError(f"target has length {len(target)}, expected {cols}")
    nvars = len(m)
    target = [Fraction(t) for t in target]
    scale = lcm(*(t.denominator for t in target)) if target else 1
    # equations: one per column of m; unknowns: one per row of m
    eqs = [[int(m[i][c]) for i in range(nvars)] + [int(target[c] * scale)] for c in range(cols)]
    neq = len(eqs)
    width = nvars + 1
    pivots = []
    r = 0
    prev = 1
    for c in range(nvars):
        if r == neq:
            break
        piv = next((i for i in range(r, neq) if eqs[i][c]), None)
        if piv is None:
            continue
        eqs[r], eqs[piv] = eqs[piv], eqs[r]
        p = eqs[r][c]
        for i in range(r + 1, neq):
            f = eqs[i][c]
            row = eqs[i]
            for j in range(c + 1, width):
                row[j] = (p * row[j] - f * eqs[r][j]) // prev
            row[c] = 0
        pivots.append(c)
        prev = p
        r += 1
    if any(eqs[i][nvars] for i in range(r, neq)):
        return None
    lam = [Fraction(0)] * nvars
    for k in range(r - 1, -1, -1):
        c = pivots[k]
        row = eqs[k]
        s = Fraction(row[nvars]) - sum(row[j] * lam[j] for j in range(c + 1, nvars))
        lam[c] = s / row[c]
    return tuple(x / scale for x in lam)


def integer_direction(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest integer vector positively proportional to ``v``."""
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)
