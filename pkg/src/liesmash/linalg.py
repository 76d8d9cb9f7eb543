"""Dense exact linear algebra over the Gaussian rationals.

Vectors are tuples of GaussianRational; matrices are lists of such rows.
Everything here is deterministic: the reduced row echelon form is the
canonical representative of a row space, so two equal subspaces always
compare equal tuple-for-tuple.
"""

from __future__ import annotations

from .exactnum import GaussianRational, ONE, ZERO

Vector = tuple

def vector(values) -> Vector:
    return tuple(GaussianRational.coerce(v) for v in values)


def zero_vector(n: int) -> Vector:
    return tuple([ZERO] * n)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Vector) -> Vector:
    c = GaussianRational.coerce(c)
    return tuple(c * a for a in x)


def is_zero_vector(x: Vector) -> bool:
    return all(not a for a in x)


def rref(rows) -> tuple[Vector, ...]:
    """Canonical reduced row echelon form; zero rows dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col]:
                pr = r
                break
        if pr is None:
            continue
        mat[pivot_row], mat[pr] = mat[pr], mat[pivot_row]
        inv = ONE / mat[pivot_row][col]
        mat[pivot_row] = [inv * v for v in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[pivot_row])]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(row) for row in mat[:pivot_row])


def pivot_columns(echelon_rows) -> list[int]:
    cols = []
    for row in echelon_rows:
        for j, v in enumerate(row):
            if v:
                cols.append(j)
                break
    return cols


def reduce_mod(echelon_rows, x: Vector) -> Vector:
    """Residual of x after eliminating the pivot coordinates of the rows."""
    res = list(x)
    for row, p in zip(echelon_rows, pivot_columns(echelon_rows)):
        if res[p]:
            f = res[p]
            res = [a - f * b for a, b in zip(res, row)]
    return tuple(res)


def in_span(echelon_rows, x: Vector) -> bool:
    return is_zero_vector(reduce_mod(echelon_rows, x))


def solve_in_basis(basis_rows, x: Vector):
    """Coordinates of x in the given (independent) basis, or None.

    basis_rows need not be in echelon form; the system is solved exactly.
    """
    n = len(x)
    k = len(basis_rows)
    # augmented transpose system: sum_j c_j basis[j] = x
    aug = [[basis_rows[j][i] for j in range(k)] + [x[i]] for i in range(n)]
    red = [list(r) for r in rref(aug)]
    coeffs = [ZERO] * k
    for row in red:
        lead = next((j for j, v in enumerate(row) if v), None)
        if lead is None:
            continue
        if lead == k:
            return None  # inconsistent: x outside the span
        coeffs[lead] = row[k]
        # independence of basis_rows makes further checks unnecessary
    return tuple(coeffs)
