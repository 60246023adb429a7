"""Dense exact linear algebra over Q(zeta_N).

Matrices are lists of row lists of Cyclotomic values, all of the same
conductor.  Everything here is plain Gaussian elimination and loops:
the dimensions in this package stay small (a few hundred at the top
end), and exactness matters more than speed.
"""

from __future__ import annotations

from typing import Sequence

from .errors import NotInvertible, ShapeMismatch
from .scalars import Cyclotomic

Matrix = list[list[Cyclotomic]]
Vector = list[Cyclotomic]


class NoSolution(ValueError):
    """The linear system is inconsistent."""


class Underdetermined(ValueError):
    """The linear system has more than one solution."""


def mat_identity(n: int, N: int = 1) -> Matrix:
    one, zero = Cyclotomic.one(N), Cyclotomic.zero(N)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_zero(rows: int, cols: int, N: int = 1) -> Matrix:
    zero = Cyclotomic.zero(N)
    return [[zero] * cols for _ in range(rows)]


def mat_shape(a: Matrix) -> tuple[int, int]:
    return len(a), len(a[0]) if a else 0


def _zero_like(*mats: Matrix) -> Cyclotomic:
    for m in mats:
        for row in m:
            for x in row:
                return Cyclotomic.zero(x.N)
    return Cyclotomic.zero(1)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    if ca != rb:
        raise ShapeMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    zero = _zero_like(a, b)
    out = []
    for i in range(ra):
        row = []
        ai = a[i]
        for j in range(cb):
            acc = zero
            for k in range(ca):
                if not ai[k].is_zero() and not b[k][j].is_zero():
                    acc = acc + ai[k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a: Matrix, v: Vector) -> Vector:
    ra, ca = mat_shape(a)
    if ca != len(v):
        raise ShapeMismatch(f"cannot apply {ra}x{ca} to vector of length {len(v)}")
    zero = _zero_like(a)
    out = []
    for i in range(ra):
        acc = zero
        for k in range(ca):
            if not a[i][k].is_zero() and not v[k].is_zero():
                acc = acc + a[i][k] * v[k]
        out.append(acc)
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    if mat_shape(a) != mat_shape(b):
        raise ShapeMismatch(f"cannot add {mat_shape(a)} and {mat_shape(b)}")
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Cyclotomic, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return mat_shape(a) == mat_shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def mat_is_identity(a: Matrix) -> bool:
    r, c = mat_shape(a)
    if r != c:
        return False
    return all(
        (a[i][j] == 1) if i == j else a[i][j].is_zero()
        for i in range(r) for j in range(c)
    )


def mat_transpose(a: Matrix) -> Matrix:
    r, c = mat_shape(a)
    return [[a[i][j] for i in range(r)] for j in range(c)]


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product in row-major block order: index (i, j) of the
    product space is i * cols(b) + j."""
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    out = []
    for i in range(ra):
        for k in range(rb):
            row = []
            for j in range(ca):
                aij = a[i][j]
                if aij.is_zero():
                    row.extend([aij * 0] * cb)
                else:
                    row.extend([aij * b[k][l] for l in range(cb)])
            out.append(row)
    return out


def mat_inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; NotInvertible on singular input."""
    n, c = mat_shape(a)
    if n != c:
        raise ShapeMismatch(f"cannot invert {n}x{c}")
    if n == 0:
        return []
    work = [list(row) + ident_row for row, ident_row in zip(
        ([x for x in r] for r in a),
        ([Cyclotomic.one(a[0][0].N) if i == j else Cyclotomic.zero(a[0][0].N)
          for j in range(n)] for i in range(n)),
    )]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise NotInvertible(f"singular at column {col}")
        work[col], work[pivot] = work[pivot], work[col]
        inv_p = work[col][col].inverse()
        work[col] = [x * inv_p for x in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def solve_right(a: Matrix, b: Vector) -> Vector:
    """The unique x with A x = b.

    NoSolution if the system is inconsistent, Underdetermined if more
    than one solution exists.
    """
    rows, cols = mat_shape(a)
    if len(b) != rows:
        raise ShapeMismatch(f"{rows} rows but {len(b)} targets")
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if not aug[i][col].is_zero()), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv_p = aug[r][col].inverse()
        aug[r] = [x * inv_p for x in aug[r]]
        for i in range(rows):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if not aug[i][cols].is_zero():
            raise NoSolution("inconsistent linear system")
    if len(pivots) < cols:
        raise Underdetermined(f"rank {len(pivots)} < {cols} unknowns")
    x = [None] * cols
    for r_i, c_i in pivots:
        x[c_i] = aug[r_i][cols]
    return x  # every column has a pivot, so no None remains


def echelon_columns(a: Matrix) -> list[Vector]:
    """A basis of the column space, as the pivot columns of a reduced
    row echelon form (columns of the original matrix)."""
    rows, cols = mat_shape(a)
    work = [list(row) for row in a]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if not work[i][col].is_zero()), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv_p = work[r][col].inverse()
        work[r] = [x * inv_p for x in work[r]]
        for i in range(rows):
            if i != r and not work[i][col].is_zero():
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return [[a[i][c] for i in range(rows)] for c in pivots]


def direct_sum(blocks: Sequence[Matrix], N: int = 1) -> Matrix:
    total_r = sum(mat_shape(b)[0] for b in blocks)
    total_c = sum(mat_shape(b)[1] for b in blocks)
    out = mat_zero(total_r, total_c, N)
    r0 = c0 = 0
    for b in blocks:
        rb, cb = mat_shape(b)
        for i in range(rb):
            for j in range(cb):
                out[r0 + i][c0 + j] = b[i][j]
        r0 += rb
        c0 += cb
    return out
