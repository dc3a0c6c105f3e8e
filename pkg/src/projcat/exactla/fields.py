"""Exact dense linear algebra over the rationals and prime fields.

A :class:`Mat` carries its shape explicitly so that the degenerate ``0 x n``
and ``n x 0`` matrices stay well defined; entries are plain scalars
(``Fraction`` or reduced ``int``).  Every routine takes the scalar arithmetic
as first argument, and echelon reduction always picks the leftmost available
pivot, which makes every output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError
from ..rings import Scalars


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    entries: tuple[tuple, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValidationError("entry grid does not match declared shape")

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))


def make(rows_data) -> Mat:
    rows = [tuple(r) for r in rows_data]
    cols = len(rows[0]) if rows else 0
    return Mat(len(rows), cols, tuple(rows))


def make_shaped(rows: int, cols: int, rows_data) -> Mat:
    return Mat(rows, cols, tuple(tuple(r) for r in rows_data))


def shape(a: Mat) -> tuple[int, int]:
    return a.rows, a.cols


def zero(k: Scalars, rows: int, cols: int) -> Mat:
    return Mat(rows, cols, tuple((k.zero(),) * cols for _ in range(rows)))


def identity(k: Scalars, n: int) -> Mat:
    return Mat(n, n, tuple(tuple(k.one() if i == j else k.zero() for j in range(n)) for i in range(n)))


def mul(k: Scalars, a: Mat, b: Mat) -> Mat:
    if a.cols != b.rows:
        raise ValidationError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = [b.column(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.entries[i]
        row = []
        for col in bt:
            acc = k.zero()
            for x, y in zip(arow, col):
                acc = k.add(acc, k.mul(x, y))
            row.append(acc)
        out.append(tuple(row))
    return Mat(a.rows, b.cols, tuple(out))


def add(k: Scalars, a: Mat, b: Mat) -> Mat:
    if shape(a) != shape(b):
        raise ValidationError("shape mismatch in addition")
    return Mat(a.rows, a.cols,
               tuple(tuple(k.add(x, y) for x, y in zip(r1, r2))
                     for r1, r2 in zip(a.entries, b.entries)))


def sub(k: Scalars, a: Mat, b: Mat) -> Mat:
    if shape(a) != shape(b):
        raise ValidationError("shape mismatch in subtraction")
    return Mat(a.rows, a.cols,
               tuple(tuple(k.sub(x, y) for x, y in zip(r1, r2))
                     for r1, r2 in zip(a.entries, b.entries)))


def scale(k: Scalars, c, a: Mat) -> Mat:
    return Mat(a.rows, a.cols, tuple(tuple(k.mul(c, x) for x in r) for r in a.entries))


def transpose(a: Mat) -> Mat:
    return Mat(a.cols, a.rows,
               tuple(tuple(a.entries[i][j] for i in range(a.rows)) for j in range(a.cols)))


def hstack(a: Mat, b: Mat) -> Mat:
    if a.rows != b.rows:
        raise ValidationError("row mismatch in hstack")
    return Mat(a.rows, a.cols + b.cols,
               tuple(r1 + r2 for r1, r2 in zip(a.entries, b.entries)))


def vstack(a: Mat, b: Mat) -> Mat:
    if a.cols != b.cols:
        raise ValidationError("column mismatch in vstack")
    return Mat(a.rows + b.rows, a.cols, a.entries + b.entries)


def take_columns(a: Mat, indices) -> Mat:
    return Mat(a.rows, len(indices),
               tuple(tuple(a.entries[i][j] for j in indices) for i in range(a.rows)))


def is_zero(k: Scalars, a: Mat) -> bool:
    return all(k.is_zero(x) for row in a.entries for x in row)


def rref(k: Scalars, a: Mat) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    m = [list(row) for row in a.entries]
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        pivot_row = next((i for i in range(r, a.rows) if not k.is_zero(m[i][c])), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = k.inv(m[r][c])
        m[r] = [k.mul(inv, x) for x in m[r]]
        for i in range(a.rows):
            if i != r and not k.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [k.sub(x, k.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return Mat(a.rows, a.cols, tuple(tuple(row) for row in m)), tuple(pivots)


def rank(k: Scalars, a: Mat) -> int:
    return len(rref(k, a)[1])


def solve(k: Scalars, a: Mat, b: Mat) -> Mat | None:
    """One solution ``x`` of ``a x = b`` (right-hand sides as columns), or None."""
    if a.rows != b.rows:
        raise ValidationError("dimension mismatch in solve")
    red, pivots = rref(k, hstack(a, b))
    if any(p >= a.cols for p in pivots):
        return None
    x = [[k.zero()] * b.cols for _ in range(a.cols)]
    for r, c in enumerate(pivots):
        for t in range(b.cols):
            x[c][t] = red[r, a.cols + t]
    return Mat(a.cols, b.cols, tuple(tuple(row) for row in x))


def kernel(k: Scalars, a: Mat) -> Mat:
    """Kernel basis as columns, canonicalized by echelon reduction."""
    red, pivots = rref(k, a)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    vectors = []
    for c in free:
        v = [k.zero()] * a.cols
        v[c] = k.one()
        for r, pc in enumerate(pivots):
            v[pc] = k.neg(red[r, c])
        vectors.append(tuple(v))
    if not vectors:
        return zero(k, a.cols, 0)
    canon, _ = rref(k, Mat(len(vectors), a.cols, tuple(vectors)))
    return transpose(canon)


def inverse(k: Scalars, a: Mat) -> Mat:
    if a.rows != a.cols:
        raise ValidationError("inverse of a non-square matrix")
    x = solve(k, a, identity(k, a.rows))
    if x is None or not is_zero(k, sub(k, mul(k, a, x), identity(k, a.rows))):
        raise ValidationError("matrix is not invertible")
    return x
