"""Braid matrices, path matrices and the two-row/two-column update rules.

``B_k(z)`` is the identity with the block ``[[z, 1], [1, 0]]`` at rows and
columns ``k, k+1`` (1-based ``k``).  Multiplying by it, or by its inverse,
touches only two rows or two columns, which is what the ``fast_*`` helpers
exploit.
"""

from __future__ import annotations

from typing import Sequence

from .braid import BraidWord
from .errors import ShapeError
from .exactlin import Field, Matrix


def _check_k(n: int, k: int):
    if not 1 <= k <= n - 1:
        raise ValueError(f"crossing index k={k} outside [1, {n - 1}]")


def braid_matrix(F: Field, n: int, k: int, z) -> Matrix:
    _check_k(n, k)
    rows = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    a = k - 1
    rows[a][a], rows[a][a + 1] = F(z), F.one
    rows[a + 1][a], rows[a + 1][a + 1] = F.one, F.zero
    return Matrix.from_rows(F, rows, n)


def braid_matrix_inverse(F: Field, n: int, k: int, z) -> Matrix:
    _check_k(n, k)
    rows = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    a = k - 1
    rows[a][a], rows[a][a + 1] = F.zero, F.one
    rows[a + 1][a], rows[a + 1][a + 1] = F.one, F.neg(F(z))
    return Matrix.from_rows(F, rows, n)


def _rows(M: Matrix) -> list[list]:
    return M.to_rows()


def fast_right_mul(M: Matrix, k: int, z) -> Matrix:
    """``M @ B_k(z)``: column k becomes ``c_{k+1} + z c_k``, column k+1 becomes ``c_k``."""
    _check_k(M.cols, k)
    F = M.field
    z = F(z)
    a = k - 1
    rows = _rows(M)
    for r in rows:
        ck, ck1 = r[a], r[a + 1]
        r[a] = F.add(ck1, F.mul(ck, z))
        r[a + 1] = ck
    return Matrix.from_rows(F, rows, M.cols)


def fast_left_mul(k: int, z, M: Matrix) -> Matrix:
    """``B_k(z) @ M``: row k becomes ``r_{k+1} + z r_k``, row k+1 becomes ``r_k``."""
    _check_k(M.rows, k)
    F = M.field
    z = F(z)
    a = k - 1
    rows = _rows(M)
    rk, rk1 = rows[a], rows[a + 1]
    rows[a] = [F.add(y, F.mul(z, x)) for x, y in zip(rk, rk1)]
    rows[a + 1] = rk
    return Matrix.from_rows(F, rows, M.cols)


def fast_right_mul_inv(M: Matrix, k: int, z) -> Matrix:
    """``M @ B_k(z)^-1``: column k becomes ``c_{k+1}``, column k+1 becomes ``c_k - z c_{k+1}``."""
    _check_k(M.cols, k)
    F = M.field
    z = F(z)
    a = k - 1
    rows = _rows(M)
    for r in rows:
        ck, ck1 = r[a], r[a + 1]
        r[a] = ck1
        r[a + 1] = F.sub(ck, F.mul(ck1, z))
    return Matrix.from_rows(F, rows, M.cols)


def fast_left_mul_inv(k: int, z, M: Matrix) -> Matrix:
    """``B_k(z)^-1 @ M``: row k becomes ``r_{k+1}``, row k+1 becomes ``r_k - z r_{k+1}``."""
    _check_k(M.rows, k)
    F = M.field
    z = F(z)
    a = k - 1
    rows = _rows(M)
    rk, rk1 = rows[a], rows[a + 1]
    rows[a] = rk1
    rows[a + 1] = [F.sub(x, F.mul(z, y)) for x, y in zip(rk, rk1)]
    return Matrix.from_rows(F, rows, M.cols)


def path_matrix(F: Field, w: BraidWord, z: Sequence) -> Matrix:
    """``B_{i_1}(z_1) ... B_{i_l}(z_l)``; the empty word gives the identity."""
    if len(z) != w.length:
        raise ShapeError(f"braid of length {w.length} needs {w.length} parameters, got {len(z)}")
    n = w.n
    rows = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    for k, zj in zip(w.gens, z):
        zj = F(zj)
        a = k - 1
        for r in rows:
            ck = r[a]
            r[a] = F.add(r[a + 1], F.mul(ck, zj))
            r[a + 1] = ck
    return Matrix.from_rows(F, rows, n)


def conjugate_diagonal(F: Field, k: int, z_left, u: Sequence, z_right) -> Matrix:
    """``B_k(z_left)^-1 diag(u) B_k(z_right)`` in closed form.

    The diagonal is ``u`` with entries k, k+1 swapped, plus the single
    off-diagonal entry ``u_k z_right - z_left u_{k+1}`` at (k+1, k).
    """
    n = len(u)
    _check_k(n, k)
    a = k - 1
    d = [F(x) for x in u]
    rows = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = d[i]
    rows[a][a], rows[a + 1][a + 1] = d[a + 1], d[a]
    rows[a + 1][a] = F.sub(F.mul(d[a], F(z_right)), F.mul(F(z_left), d[a + 1]))
    return Matrix.from_rows(F, rows, n)


def conjugation_offdiagonal(F: Field, k: int, z_left, u: Sequence, z_right):
    """Just the (k+1, k) entry of :func:`conjugate_diagonal`."""
    return F.sub(F.mul(F(u[k - 1]), F(z_right)), F.mul(F(z_left), F(u[k])))
