"""Matrices over the Laurent ring: Smith normal form, ranks, evaluation.

The Smith normal form is computed by Euclidean elimination after clearing
t-power units row- and column-wise, with the pivot chosen as the minimal
degree-span entry (ties: smallest coefficient height, then row-major).
Both transforms and their inverses are accumulated from elementary
operations, and the result is certified before it is returned:
left*M*right must reconstruct the diagonal exactly, the diagonal must form
a divisibility chain, and both transform determinants must be units.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .laurent import LaurentPoly, poly
from .linalg import NUMERIC_RANK_RTOL, exact_rank, numeric_rank
from .rationals import GaussianRational


class LaurentMatrix:
    """Immutable rows x cols matrix of Laurent polynomials."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(poly(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentMatrix is immutable")

    @staticmethod
    def from_rows(rows_of_entries) -> "LaurentMatrix":
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        flat = []
        for r in rows_of_entries:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return LaurentMatrix(rows, cols, flat)

    @staticmethod
    def zero(rows: int, cols: int) -> "LaurentMatrix":
        return LaurentMatrix(rows, cols, [LaurentPoly.zero()] * (rows * cols))

    @staticmethod
    def identity(n: int) -> "LaurentMatrix":
        e = [LaurentPoly.one() if i == j else LaurentPoly.zero() for i in range(n) for j in range(n)]
        return LaurentMatrix(n, n, e)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(
            self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)]
        )

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = LaurentPoly.zero()
                for k in range(self.cols):
                    a = ri[k]
                    if not a.is_zero():
                        b = other[k, j]
                        if not b.is_zero():
                            acc = acc + a * b
                out.append(acc)
        return LaurentMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __repr__(self):
        body = "; ".join(", ".join(e.pretty() for e in self.row(i)) for i in range(self.rows))
        return f"LaurentMatrix({self.rows}x{self.cols}: [{body}])"

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[e.to_json() for e in self.row(i)] for i in range(self.rows)],
        }

    @staticmethod
    def from_json(obj) -> "LaurentMatrix":
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        ent = obj["entries"]
        if len(ent) != rows or any(len(r) != cols for r in ent):
            raise ValueError("entry grid does not match declared shape")
        flat = [LaurentPoly.from_json(e) for r in ent for e in r]
        return LaurentMatrix(rows, cols, flat)

    def evaluate(self, z):
        """Evaluate entrywise at z in C*.

        Exact (nested lists of Fraction/GaussianRational) when z is exact;
        a complex numpy array otherwise.
        """
        if isinstance(z, GaussianRational):
            if z.is_zero():
                raise ZeroDivisionError("evaluation point must be nonzero")
            return [[e.evaluate(z) for e in self.row(i)] for i in range(self.rows)]
        if isinstance(z, Fraction) or isinstance(z, int):
            if z == 0:
                raise ZeroDivisionError("evaluation point must be nonzero")
            return [[e.evaluate(Fraction(z)) for e in self.row(i)] for i in range(self.rows)]
        zc = complex(z)
        if zc == 0:
            raise ZeroDivisionError("evaluation point must be nonzero")
        out = np.zeros((self.rows, self.cols), dtype=complex)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = self[i, j].evaluate(zc)
        return out

    def rank_at(self, z, rtol: float = NUMERIC_RANK_RTOL) -> int:
        """Rank of the evaluated matrix: exact for exact z, SVD otherwise."""
        val = self.evaluate(z)
        if isinstance(val, np.ndarray):
            return numeric_rank(val, rtol)
        return exact_rank(val, self.cols)


def evaluate_matrix(m: LaurentMatrix, z):
    return m.evaluate(z)


@dataclass
class SnfResult:
    """Certified Smith normal form: left*matrix*right is diagonal.

    diag holds the canonicalized nonzero diagonal entries (units appear as
    1), so rank == len(diag) and diag[i] divides diag[i+1].  left_inv and
    right_inv are exact inverses of the transforms.
    """

    left: LaurentMatrix
    diag: list
    right: LaurentMatrix
    rank: int
    left_inv: LaurentMatrix = field(repr=False, default=None)
    right_inv: LaurentMatrix = field(repr=False, default=None)

    def diagonal_matrix(self, rows: int, cols: int) -> LaurentMatrix:
        ent = [LaurentPoly.zero()] * (rows * cols)
        for i, d in enumerate(self.diag):
            ent[i * cols + i] = d
        return LaurentMatrix(rows, cols, ent)

    def invariant_factors(self):
        """The nonunit diagonal entries."""
        return [d for d in self.diag if d.span > 0]


class _Worker:
    """Mutable elimination state with transform bookkeeping.

    Maintains left*M*right == A after every elementary operation, together
    with the exact inverse transforms.
    """

    def __init__(self, m: LaurentMatrix):
        self.nr, self.nc = m.rows, m.cols
        self.a = [m.row(i) for i in range(m.rows)]
        self.left = _eye(self.nr)
        self.left_inv = _eye(self.nr)
        self.right = _eye(self.nc)
        self.right_inv = _eye(self.nc)

    def swap_rows(self, i, j):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.left[i], self.left[j] = self.left[j], self.left[i]
        for r in self.left_inv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for r in self.a:
            r[i], r[j] = r[j], r[i]
        for r in self.right:
            r[i], r[j] = r[j], r[i]
        self.right_inv[i], self.right_inv[j] = self.right_inv[j], self.right_inv[i]

    def addmul_row(self, dst, src, q: LaurentPoly):
        """row[dst] += q * row[src]; records inverse op."""
        if q.is_zero():
            return
        self.a[dst] = [x + q * y for x, y in zip(self.a[dst], self.a[src])]
        self.left[dst] = [x + q * y for x, y in zip(self.left[dst], self.left[src])]
        for r in self.left_inv:
            r[src] = r[src] - q * r[dst]

    def addmul_col(self, dst, src, q: LaurentPoly):
        if q.is_zero():
            return
        for r in self.a:
            r[dst] = r[dst] + q * r[src]
        for r in self.right:
            r[dst] = r[dst] + q * r[src]
        self.right_inv[src] = [x - q * y for x, y in zip(self.right_inv[src], self.right_inv[dst])]

    def scale_row(self, i, unit: LaurentPoly):
        c = unit.coeffs[0]
        inv_c = c.inverse() if isinstance(c, GaussianRational) else 1 / c
        inv = LaurentPoly(-unit.low, (inv_c,))
        self.a[i] = [unit * x for x in self.a[i]]
        self.left[i] = [unit * x for x in self.left[i]]
        for r in self.left_inv:
            r[i] = r[i] * inv

    def scale_col(self, j, unit: LaurentPoly):
        c = unit.coeffs[0]
        inv_c = c.inverse() if isinstance(c, GaussianRational) else 1 / c
        inv = LaurentPoly(-unit.low, (inv_c,))
        for r in self.a:
            r[j] = r[j] * unit
        for r in self.right:
            r[j] = r[j] * unit
        self.right_inv[j] = [inv * x for x in self.right_inv[j]]


def _eye(n):
    return [[LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)] for i in range(n)]


def _pivot_key(p: LaurentPoly):
    return (p.span, p.height())


def smith_normal_form(m: LaurentMatrix, certify: bool = True) -> SnfResult:
    """Smith normal form over the Laurent ring, with unimodular transforms.

    Zero and empty matrices are fine.  When certify is set (the default)
    the factorization is re-multiplied and the transform determinants are
    checked to be units; a failure raises RuntimeError.
    """
    w = _Worker(m)
    nr, nc = w.nr, w.nc

    # Clear t-power units so every entry lives in Q[t].
    for i in range(nr):
        lows = [e.low for e in w.a[i] if not e.is_zero()]
        if lows and min(lows) != 0:
            w.scale_row(i, LaurentPoly.t_power(-min(lows)))
    for j in range(nc):
        lows = [w.a[i][j].low for i in range(nr) if not w.a[i][j].is_zero()]
        if lows and min(lows) != 0:
            w.scale_col(j, LaurentPoly.t_power(-min(lows)))

    k = 0
    limit = min(nr, nc)
    while k < limit:
        pos = _best_pivot(w.a, k, nr, nc)
        if pos is None:
            break
        w.swap_rows(k, pos[0])
        w.swap_cols(k, pos[1])
        while True:
            # Kill column k, re-pivoting on any nonzero remainder.
            restart = False
            for i in range(k + 1, nr):
                if w.a[i][k].is_zero():
                    continue
                q, r = divmod(w.a[i][k], w.a[k][k])
                w.addmul_row(i, k, -q)
                if not r.is_zero():
                    w.swap_rows(i, k)
                    restart = True
                    break
            if restart:
                continue
            for j in range(k + 1, nc):
                if w.a[k][j].is_zero():
                    continue
                q, r = divmod(w.a[k][j], w.a[k][k])
                w.addmul_col(j, k, -q)
                if not r.is_zero():
                    w.swap_cols(j, k)
                    restart = True
                    break
            if restart:
                continue
            # Row and column are clean; force divisibility of the rest.
            offender = None
            for i in range(k + 1, nr):
                for j in range(k + 1, nc):
                    if not w.a[i][j].is_zero() and not (w.a[i][j] % w.a[k][k]).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            w.addmul_row(k, offender, LaurentPoly.one())
        k += 1

    # Canonicalize the diagonal by unit row scalings.
    diag = []
    for i in range(limit):
        d = w.a[i][i]
        if d.is_zero():
            break
        lead = d.coeffs[-1]
        inv = lead.inverse() if isinstance(lead, GaussianRational) else 1 / lead
        unit = LaurentPoly(-d.low, (inv,))
        if not unit.is_one():
            w.scale_row(i, unit)
        diag.append(w.a[i][i])

    left = LaurentMatrix.from_rows(w.left) if nr else LaurentMatrix(0, 0, [])
    right = LaurentMatrix.from_rows(w.right) if nc else LaurentMatrix(0, 0, [])
    left_inv = LaurentMatrix.from_rows(w.left_inv) if nr else LaurentMatrix(0, 0, [])
    right_inv = LaurentMatrix.from_rows(w.right_inv) if nc else LaurentMatrix(0, 0, [])
    res = SnfResult(left=left, diag=diag, right=right, rank=len(diag),
                    left_inv=left_inv, right_inv=right_inv)

    if certify:
        _certify(m, res)
    return res


def _best_pivot(a, k, nr, nc):
    best = None
    best_key = None
    for i in range(k, nr):
        for j in range(k, nc):
            e = a[i][j]
            if e.is_zero():
                continue
            key = _pivot_key(e)
            if best_key is None or key < best_key:
                best, best_key = (i, j), key
    return best


def _certify(m: LaurentMatrix, res: SnfResult):
    d = res.diagonal_matrix(m.rows, m.cols)
    if res.left * m * res.right != d:
        raise RuntimeError("SNF reconstruction failed")
    for i in range(len(res.diag) - 1):
        if not res.diag[i].divides(res.diag[i + 1]):
            raise RuntimeError("SNF divisibility chain failed")
    for t, ti in ((res.left, res.left_inv), (res.right, res.right_inv)):
        if t.rows:
            if not determinant(t).is_unit():
                raise RuntimeError("SNF transform is not unimodular")
            if t * ti != LaurentMatrix.identity(t.rows):
                raise RuntimeError("SNF transform inverse failed")


def determinant(m: LaurentMatrix) -> LaurentPoly:
    """Exact determinant: Laplace expansion to 5x5, Bareiss above."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return LaurentPoly.one()
    rows = m.to_lists()
    if n <= 5:
        return _det_laplace(rows, list(range(n)))
    return _det_bareiss(rows)


def _det_laplace(rows, cols):
    if len(cols) == 1:
        return rows[len(rows) - 1][cols[0]]
    out = LaurentPoly.zero()
    r = len(rows) - len(cols)
    for idx, c in enumerate(cols):
        e = rows[r][c]
        if e.is_zero():
            continue
        sub = _det_laplace(rows, cols[:idx] + cols[idx + 1 :])
        term = e * sub
        out = out + (term if idx % 2 == 0 else -term)
    return out


def _det_bareiss(rows):
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return LaurentPoly.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def rank_ff(m: LaurentMatrix) -> int:
    """Rank over the fraction field, by cross-multiplication elimination.

    Independent of the Smith normal form path; used as its cross-check.
    """
    a = [m.row(i) for i in range(m.rows)]
    nr, nc = m.rows, m.cols
    rank = 0
    for col in range(nc):
        pivot = None
        for i in range(rank, nr):
            if not a[i][col].is_zero():
                if pivot is None or _pivot_key(a[i][col]) < _pivot_key(a[pivot][col]):
                    pivot = i
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, nr):
            if a[i][col].is_zero():
                continue
            f = a[i][col]
            row = [p * a[i][j] - f * a[rank][j] for j in range(nc)]
            a[i] = _strip_row_units(row)
        rank += 1
        if rank == nr:
            break
    return rank


def _strip_row_units(row):
    """Scale a row by a unit so entries stay small during elimination."""
    nz = [e for e in row if not e.is_zero()]
    if not nz:
        return row
    shift = -min(e.low for e in nz)
    if shift:
        row = [e.shift(shift) for e in row]
        nz = [e for e in row if not e.is_zero()]
    if all(e.is_rational() for e in nz):
        from math import gcd

        num, den = 0, 1
        for e in nz:
            c = e.content()
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        content = Fraction(num, den)
        if content != 1:
            row = [e.scale(1 / content) for e in row]
    return row
