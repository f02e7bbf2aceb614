"""Field linear algebra shared by the matrix, twisted-fiber and cup modules.

Exact routines operate on list-of-list matrices whose entries are Fraction
or GaussianRational (any mix); numeric routines use SVD with a single
relative tolerance so every floating rank decision in the package is
calibrated at one point.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

# Relative singular-value cutoff for every numeric rank decision.
NUMERIC_RANK_RTOL = 1e-9


def numeric_rank(a: np.ndarray, rtol: float = NUMERIC_RANK_RTOL) -> int:
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def exact_rref(rows, ncols: int):
    """Reduced row echelon form over an exact field.

    Returns (rref rows, pivot column list).  The input rows are not
    mutated.
    """
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = _inv(a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def exact_rank(rows, ncols: int) -> int:
    return len(exact_rref(rows, ncols)[1])


def exact_kernel(rows, ncols: int):
    """Basis of the right kernel, as a list of length-ncols vectors."""
    rref, pivots = exact_rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][f]
        basis.append(v)
    return basis


def exact_solve(rows, ncols: int, rhs):
    """One solution x of A x = b over an exact field, or None if inconsistent.

    rhs is a list of column vectors (each of length len(rows)); returns the
    list of solution vectors in the same order.
    """
    nrows = len(rows)
    width = ncols + len(rhs)
    aug = [list(rows[i]) + [col[i] for col in rhs] for i in range(nrows)]
    rref, pivots = exact_rref(aug, width)
    # Inconsistent iff some pivot falls in the appended block.
    for r, pc in enumerate(pivots):
        if pc >= ncols:
            return None
    sols = []
    for j in range(len(rhs)):
        x = [Fraction(0)] * ncols
        for r, pc in enumerate(pivots):
            x[pc] = rref[r][ncols + j]
        sols.append(x)
    return sols


def _inv(x):
    if isinstance(x, Fraction):
        return 1 / x
    return x.inverse()
