"""Exact integer linear algebra: Hermite and Smith normal forms, lattice solves.

All arithmetic uses Python's arbitrary-precision integers; there is no
floating point anywhere.  The Hermite form here is column-style: ``A @ U = H``
with ``U`` unimodular, the nonzero columns of ``H`` form the canonical basis
of the column lattice of ``A``, pivots are positive, and in each pivot row the
entries to the right of the pivot are reduced into ``[0, pivot)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..errors import InternalCheckError, ValidationError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValidationError("entry grid does not match declared shape")

    @staticmethod
    def from_rows(rows_data) -> "IntMatrix":
        rows = [tuple(int(x) for x in row) for row in rows_data]
        ncols = len(rows[0]) if rows else 0
        return IntMatrix(len(rows), ncols, tuple(rows))

    @staticmethod
    def from_rows_shaped(nrows: int, ncols: int, rows_data) -> "IntMatrix":
        rows = [tuple(int(x) for x in row) for row in rows_data]
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValidationError("entry grid does not match declared shape")
        return IntMatrix(nrows, ncols, tuple(rows))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValidationError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = other.transpose().entries
        return IntMatrix(
            self.rows, other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                for row in self.entries
            ),
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValidationError("shape mismatch in addition")
        return IntMatrix(
            self.rows, self.cols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def take_columns(self, indices) -> "IntMatrix":
        return IntMatrix(
            self.rows, len(indices),
            tuple(tuple(self.entries[i][j] for j in indices) for i in range(self.rows)),
        )

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValidationError("row mismatch in hstack")
        return IntMatrix(
            self.rows, self.cols + other.cols,
            tuple(r1 + r2 for r1, r2 in zip(self.entries, other.entries)),
        )

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValidationError("column mismatch in vstack")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def det(self) -> int:
        """Fraction-free Bareiss determinant."""
        if self.rows != self.cols:
            raise ValidationError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class HermiteForm:
    """Column-style Hermite form: ``matrix @ u == h``, ``u`` unimodular.

    The first ``rank`` columns of ``h`` are the canonical lattice basis;
    ``pivots[k]`` is the pivot row of column ``k``.
    """

    h: IntMatrix
    u: IntMatrix
    rank: int
    pivots: tuple[int, ...]


def hermite(a: IntMatrix) -> HermiteForm:
    """Canonical column Hermite form of the column lattice of ``a``.

    Rows are swept bottom-up; each pivot is made positive, entries to its
    left in the pivot row are eliminated, entries to its right reduced into
    ``[0, pivot)``.  Zero columns are moved to the end.
    """
    rows, cols = a.rows, a.cols
    h = [list(r) for r in a.entries]
    u = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def col_op(c1: int, c2: int, x: int, y: int, z: int, w: int):
        # (col c1, col c2) <- (x*c1 + y*c2, z*c1 + w*c2); determinant x*w - y*z = +-1
        for m in (h, u):
            for row in m:
                a1, a2 = row[c1], row[c2]
                row[c1] = x * a1 + y * a2
                row[c2] = z * a1 + w * a2

    def addmul(dst: int, src: int, q: int):
        for m in (h, u):
            for row in m:
                row[dst] += q * row[src]

    def negate(c1: int):
        for m in (h, u):
            for row in m:
                row[c1] = -row[c1]

    pivots_rev: list[tuple[int, int]] = []  # (pivot_row, pivot_col), built bottom-up
    c = cols - 1
    for i in range(rows - 1, -1, -1):
        if c < 0:
            break
        # gcd-eliminate row i across columns 0..c, collecting the gcd at column c
        nz = [j for j in range(c + 1) if h[i][j] != 0]
        if not nz:
            continue
        for j in nz:
            if j == c:
                continue
            aa, bb = h[i][c], h[i][j]
            if aa == 0:
                col_op(c, j, 0, 1, 1, 0)  # swap
                continue
            g = gcd(aa, bb)
            x, y = _gcdex(aa, bb)
            # c <- x*c + y*j carries g; j <- -(bb//g)*c + (aa//g)*j becomes 0 at row i
            col_op(c, j, x, y, -(bb // g), aa // g)
        if h[i][c] < 0:
            negate(c)
        if h[i][c] == 0:
            raise InternalCheckError("pivot vanished during elimination")
        pivot = h[i][c]
        # reduce entries to the right of the pivot in its row into [0, pivot)
        for j in range(c + 1, cols):
            q = h[i][j] // pivot
            if q:
                addmul(j, c, -q)
        pivots_rev.append((i, c))
        c -= 1

    rank = len(pivots_rev)
    # move the (leading) zero columns to the end, keeping pivot order
    nonzero_cols = [pc for _, pc in reversed(pivots_rev)]
    zero_cols = [j for j in range(cols) if j not in set(nonzero_cols)]
    perm = nonzero_cols + zero_cols
    hm = IntMatrix.from_rows([[h[i][j] for j in perm] for i in range(rows)] if rows else [])
    if rows == 0:
        hm = IntMatrix.zero(0, cols)
    um = IntMatrix.from_rows([[u[i][j] for j in perm] for i in range(cols)] if cols else [])
    if cols == 0:
        um = IntMatrix.identity(0)
    pivot_rows = tuple(pr for pr, _ in reversed(pivots_rev))
    form = HermiteForm(hm, um, rank, pivot_rows)
    if a @ form.u != form.h:
        raise InternalCheckError("Hermite witness failed")
    return form


def _gcdex(a: int, b: int) -> tuple[int, int]:
    """Return (x, y) with a*x + b*y == gcd(a, b)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0


@dataclass(frozen=True)
class SmithForm:
    """``l @ matrix @ r == d`` diagonal with the divisibility chain; l, r unimodular."""

    d: IntMatrix
    l: IntMatrix
    r: IntMatrix
    l_inv: IntMatrix
    r_inv: IntMatrix
    invariant_factors: tuple[int, ...]


def smith(a: IntMatrix) -> SmithForm:
    rows, cols = a.rows, a.cols
    d = [list(r) for r in a.entries]
    l = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    li = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    r = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    ri = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def row_addmul(dst, src, q):
        d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
        l[dst] = [x + q * y for x, y in zip(l[dst], l[src])]
        # inverse op on l_inv: column src -= q * column dst
        for row in li:
            row[src] -= q * row[dst]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        l[i], l[j] = l[j], l[i]
        for row in li:
            row[i], row[j] = row[j], row[i]

    def row_negate(i):
        d[i] = [-x for x in d[i]]
        l[i] = [-x for x in l[i]]
        for row in li:
            row[i] = -row[i]

    def col_addmul(dst, src, q):
        for row in d:
            row[dst] += q * row[src]
        for row in r:
            row[dst] += q * row[src]
        ri[src] = [x - q * y for x, y in zip(ri[src], ri[dst])]

    def col_swap(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in r:
            row[i], row[j] = row[j], row[i]
        ri[i], ri[j] = ri[j], ri[i]

    n = min(rows, cols)
    t = 0
    while t < n:
        # locate the entry of smallest absolute value in the working block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(d[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        # clear row t and column t; pivoting may reintroduce entries, so loop
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    row_addmul(i, t, -q)
                    if d[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    col_addmul(j, t, -q)
                    if d[t][j]:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                break
        if d[t][t] < 0:
            row_negate(t)
        # enforce the divisibility chain
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_addmul(t, offender, 1)
            continue
        t += 1

    dm = IntMatrix.from_rows(d) if rows else IntMatrix.zero(0, cols)
    lm = IntMatrix.from_rows(l) if rows else IntMatrix.identity(0)
    lim = IntMatrix.from_rows(li) if rows else IntMatrix.identity(0)
    rm = IntMatrix.from_rows(r) if cols else IntMatrix.identity(0)
    rim = IntMatrix.from_rows(ri) if cols else IntMatrix.identity(0)
    factors = tuple(dm[k, k] for k in range(n) if dm[k, k])
    form = SmithForm(dm, lm, rm, lim, rim, factors)
    if lm @ a @ rm != dm:
        raise InternalCheckError("Smith witness failed")
    if lm @ lim != IntMatrix.identity(rows) or rm @ rim != IntMatrix.identity(cols):
        raise InternalCheckError("Smith inverse witness failed")
    for x, y in zip(factors, factors[1:]):
        if y % x:
            raise InternalCheckError("Smith divisibility chain failed")
    return form


def int_solve_matrix(a: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """One integer solution ``x`` of ``a @ x == b``, or None.

    Solvability is decided through the Hermite form: with ``a @ u == h`` the
    system reduces to forward substitution along the pivot staircase.
    """
    if a.rows != b.rows:
        raise ValidationError("dimension mismatch in int_solve")
    form = hermite(a)
    h, u, rank, pivots = form.h, form.u, form.rank, form.pivots
    ys = []
    for t in range(b.cols):
        y = [0] * a.cols
        rhs = list(b.column(t))
        for k in range(rank - 1, -1, -1):
            i = pivots[k]
            acc = rhs[i] - sum(h[i, c] * y[c] for c in range(k + 1, rank))
            if acc % h[i, k]:
                return None
            y[k] = acc // h[i, k]
        # consistency on non-pivot rows
        for i in range(a.rows):
            if sum(h[i, c] * y[c] for c in range(rank)) != rhs[i]:
                return None
        ys.append(y)
    ymat = IntMatrix.from_rows([[ys[t][c] for t in range(b.cols)] for c in range(a.cols)]) \
        if a.cols else IntMatrix.zero(0, b.cols)
    x = u @ ymat
    if a @ x != b:
        raise InternalCheckError("integer solve verification failed")
    return x


def int_solve(a: IntMatrix, b) -> list[int] | None:
    """One integer solution of ``a x = b`` for a vector ``b``, or None."""
    bm = IntMatrix.from_rows([[int(v)] for v in b]) if a.rows else IntMatrix.zero(0, 1)
    x = int_solve_matrix(a, bm)
    if x is None:
        return None
    return [x[i, 0] for i in range(a.cols)]


def int_kernel(a: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel lattice of ``a`` (as columns)."""
    form = hermite(a)
    ker_cols = list(range(form.rank, a.cols))
    basis = form.u.take_columns(ker_cols)
    if not (a @ basis).is_zero():
        raise InternalCheckError("kernel verification failed")
    return basis


def lattice_rank(a: IntMatrix) -> int:
    return hermite(a).rank
