"""Small exact linear algebra over the rationals.

Gaussian elimination on lists of `fractions.Fraction` rows.  All matrices
in this package are desk-scale (tens of rows), so no pivoting strategy
beyond "first nonzero" is needed; arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction


def rank(rows: list[list[Fraction]]) -> int:
    """Exact rank of the matrix given as a list of rows."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve_overdetermined(a: list[list[Fraction]], b: list[Fraction]):
    """Solve A x = b exactly for A with full column rank and rows >= cols.

    Returns the solution vector, or None when the system is inconsistent.
    Raises ValueError if the columns are dependent (no unique solution).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = Fraction(1) / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if len(pivots) < ncols:
        raise ValueError("columns are linearly dependent; solution not unique")
    if any(aug[i][ncols] != 0 for i in range(r, nrows)):
        return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = aug[i][ncols]
    return x
