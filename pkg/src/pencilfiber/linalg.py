"""Dense exact linear algebra over Q(w): echelon forms, rank, null spaces.

Matrices are lists of rows of EisensteinNumber.  Everything is computed by
exact Gaussian elimination with a nonzero-pivot search, so results are
certificates, not estimates.
"""

from __future__ import annotations

from .eisenstein import ONE, ZERO, EisensteinNumber

Matrix = list[list[EisensteinNumber]]
Vector = list[EisensteinNumber]


def rref(rows: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns of a copy of ``rows``."""
    m = [list(row) for row in rows]
    if not m:
        return [], ()
    ncols = len(m[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = m[rank][col].inverse()
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], tuple(pivots)


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : rows @ x = 0}, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for row, piv in zip(reduced, pivots):
            vec[piv] = -row[free]
        basis.append(vec)
    return basis


def reduce_mod_rowspace(vector: Vector, reduced: Matrix, pivots: tuple[int, ...]) -> Vector:
    """Canonical representative of ``vector`` modulo the row space given in RREF."""
    out = list(vector)
    for row, piv in zip(reduced, pivots):
        factor = out[piv]
        if factor:
            out = [a - factor * b for a, b in zip(out, row)]
    return out


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return [sum((a * b for a, b in zip(row, v)), ZERO) for row in m]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO) for j in range(len(b[0]))] for i in range(len(a))]


def identity_matrix(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; ValueError when singular."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    augmented = [list(row) + ident for row, ident in zip(m, identity_matrix(n))]
    reduced, pivots = rref(augmented)
    if list(pivots) != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]
