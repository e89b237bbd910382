"""Exact rational linear algebra for small dense systems.

All routines work on lists of rows of :class:`fractions.Fraction` (ints are
accepted and coerced).  The elimination is fraction-free: each row is first
scaled to integers, then reduced with Bareiss one-step division, so every
intermediate entry is an exact integer minor of the scaled input.  Pivoting
is deterministic -- for each pivot column the first row (in current order)
with a nonzero entry is chosen -- which makes echelon forms, ranks and
kernel bases reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _integer_rows(rows):
    """Copy ``rows`` with every row scaled by the lcm of its denominators."""
    out = []
    for row in rows:
        frs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in frs)) if frs else 1
        out.append([int(f * scale) for f in frs])
    return out


def _bareiss_echelon(mat, ncols):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(rows, pivot_cols)`` where ``rows`` holds the nonzero echelon
    rows (integer entries) and ``pivot_cols[i]`` is the pivot column of row
    ``i``.  The Bareiss update divides by the previous pivot; the division
    is exact by the Sylvester determinant identity.
    """
    m = [row[:] for row in mat]
    nrows = len(m)
    pivot_cols = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c, ncols):
                num = piv * row_i[j] - f * row_r[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
        pivot_cols.append(c)
        prev = piv
        r += 1
        if r == nrows:
            break
    return m[:r], pivot_cols


def rank(rows, ncols):
    """Exact rank of a rational matrix given as an iterable of rows."""
    rows = list(rows)
    if not rows:
        return 0
    _, pivots = _bareiss_echelon(_integer_rows(rows), ncols)
    return len(pivots)


def nullspace(rows, ncols):
    """Deterministic rational kernel basis of the matrix ``rows``.

    One basis vector per free column, free columns taken in input order;
    the vector has 1 at its free column and 0 at every other free column,
    exactly as read off the reduced row echelon form.
    """
    rows = list(rows)
    if not rows:
        return [[Fraction(i == j) for j in range(ncols)] for i in range(ncols)]
    ech, pivot_cols = _bareiss_echelon(_integer_rows(rows), ncols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i in range(len(pivot_cols) - 1, -1, -1):
            pc = pivot_cols[i]
            s = sum((Fraction(ech[i][j]) * v[j] for j in range(pc + 1, ncols)),
                    Fraction(0))
            v[pc] = -s / ech[i][pc]
        basis.append(v)
    return basis


def solve(rows, rhs, ncols):
    """Solve ``A x = b`` exactly.

    Returns ``(particular, kernel)`` where ``particular`` is a solution with
    all free variables set to zero (``None`` when the system is infeasible)
    and ``kernel`` is the kernel basis of ``A``.
    """
    rows = list(rows)
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    if not aug:
        return [Fraction(0)] * ncols, nullspace([], ncols)
    ech, pivot_cols = _bareiss_echelon(_integer_rows(aug), ncols + 1)
    if pivot_cols and pivot_cols[-1] == ncols:
        return None, nullspace(rows, ncols)
    x = [Fraction(0)] * ncols
    for i in range(len(pivot_cols) - 1, -1, -1):
        pc = pivot_cols[i]
        s = sum((Fraction(ech[i][j]) * x[j] for j in range(pc + 1, ncols)),
                Fraction(0))
        x[pc] = (Fraction(ech[i][ncols]) - s) / ech[i][pc]
    return x, nullspace(rows, ncols)


def in_row_span(rows, target, ncols):
    """True when ``target`` lies in the rational row span of ``rows``."""
    base = list(rows)
    return rank(base + [list(target)], ncols) == rank(base, ncols)
