"""Exact integer linear algebra on small dense matrices.

Matrices are lists of rows of Python ints, so every operation is exact at
arbitrary size of the entries.
"""

from dataclasses import dataclass

import sympy

IntMatrix = list[list[int]]


@dataclass
class ColumnHermiteForm:
    """Result of unimodular column reduction A @ U = H.

    H is in lower column-echelon form: column j < rank has its leading
    nonzero (positive) entry in row pivot_rows[j], entries of that row to
    the left of the pivot are reduced modulo the pivot, and columns
    j >= rank are zero.
    """
    H: IntMatrix
    U: IntMatrix
    pivot_rows: list[int]

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def kernel_columns(self) -> list[list[int]]:
        """Columns of U spanning ker A over the integers."""
        n = len(self.U)
        return [[self.U[i][j] for i in range(n)] for j in range(self.rank, n)]


def _swap_columns(M: IntMatrix, a: int, b: int) -> None:
    for row in M:
        row[a], row[b] = row[b], row[a]


def _add_column_multiple(M: IntMatrix, target: int, source: int, factor: int) -> None:
    if factor:
        for row in M:
            row[target] += factor * row[source]


def _negate_column(M: IntMatrix, j: int) -> None:
    for row in M:
        row[j] = -row[j]


def column_hermite(A: IntMatrix, n_cols: int | None = None) -> ColumnHermiteForm:
    """Column Hermite normal form of an integer matrix, with its unimodular transform."""
    m = len(A)
    n = n_cols if n_cols is not None else (len(A[0]) if A else 0)
    H = [list(map(int, row)) for row in A]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivot_rows: list[int] = []
    col = 0
    for i in range(m):
        if col >= n:
            break
        while True:
            nonzero = [j for j in range(col, n) if H[i][j] != 0]
            if not nonzero:
                break
            j_min = min(nonzero, key=lambda j: abs(H[i][j]))
            if j_min != col:
                _swap_columns(H, col, j_min)
                _swap_columns(U, col, j_min)
            done = True
            for j in range(col + 1, n):
                if H[i][j]:
                    q = H[i][j] // H[i][col]
                    _add_column_multiple(H, j, col, -q)
                    _add_column_multiple(U, j, col, -q)
                    if H[i][j]:
                        done = False
            if done:
                break
        if H[i][col] == 0:
            continue
        if H[i][col] < 0:
            _negate_column(H, col)
            _negate_column(U, col)
        pivot = H[i][col]
        for j in range(col):
            q = H[i][j] // pivot
            _add_column_multiple(H, j, col, -q)
            _add_column_multiple(U, j, col, -q)
        pivot_rows.append(i)
        col += 1
    return ColumnHermiteForm(H=H, U=U, pivot_rows=pivot_rows)


def row_echelon_basis(vectors: list[list[int]]) -> list[list[int]]:
    """Integer row-echelon (Hermite) form of a lattice basis given as rows.

    Each returned row has a positive leading entry strictly to the right of
    the previous row's, and earlier rows are reduced modulo each pivot.
    """
    if not vectors:
        return []
    transposed = [list(col) for col in zip(*vectors)]
    form = column_hermite(transposed, n_cols=len(vectors))
    return [[form.H[i][j] for i in range(len(transposed))] for j in range(form.rank)]


def solve_integer(form: ColumnHermiteForm, rhs: list[int]) -> list[int] | None:
    """Find an integer x with A x = rhs, or None if none exists.

    Uses the stored factorization A U = H: solve H y = rhs by forward
    substitution on the pivot rows, check the remaining rows, and return
    x = U y with free coordinates set to zero.
    """
    H, U = form.H, form.U
    m = len(H)
    n = len(U)
    y = [0] * n
    pivot_of_row = {r: j for j, r in enumerate(form.pivot_rows)}
    for i in range(m):
        acc = sum(H[i][j] * y[j] for j in range(form.rank))
        if i in pivot_of_row:
            j = pivot_of_row[i]
            residual = rhs[i] - (acc - H[i][j] * y[j])
            q, r = divmod(residual, H[i][j])
            if r:
                return None
            y[j] = q
        elif acc != rhs[i]:
            return None
    return [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]


def rational_left_inverse_bound(basis_rows: list[list[int]]) -> float:
    """Max |entry| of a left inverse of the basis (as columns).

    Gives the coordinate bound |c_i| <= bound * ||B c||_1 used to size the
    enumeration box.
    """
    if not basis_rows:
        return 0.0
    B = sympy.Matrix(basis_rows).T
    pinv = (B.T * B).inv() * B.T
    return float(max(abs(x) for x in pinv))
