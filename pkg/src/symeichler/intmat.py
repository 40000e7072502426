"""Exact integer matrix helpers.

Matrices are tuples of row tuples of Python ints, vectors are tuples of
ints.  Nothing here ever touches floating point.
"""

from fractions import Fraction

from ._arith import xgcd


def as_matrix(rows):
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(A):
    return tuple(zip(*A))


def matmul(A, B):
    Bt = transpose(B)
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A
    )


def matvec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def columns(A):
    """Columns of ``A`` as vectors."""
    return [tuple(c) for c in transpose(A)]


def from_columns(cols):
    return transpose(tuple(tuple(c) for c in cols))


def det(A) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse_rational(A):
    """Exact inverse over the rationals (Gauss-Jordan on Fractions)."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        pv = M[c][c]
        M[c] = [x / pv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def inverse_unimodular(A):
    """Inverse of an integer matrix of determinant +-1."""
    inv = inverse_rational(A)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def kernel_basis(A, n=None):
    """Basis of the integer kernel ``{x in Z^n : A x = 0}``.

    Column-style Hermite elimination: unimodular column operations bring
    ``A`` to lower echelon form while the same operations are recorded in
    ``U``; the columns of ``U`` past the rank span the kernel over Z.
    """
    rows = [list(r) for r in A]
    if n is None:
        n = len(rows[0])
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_combine(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
        for M in (rows, U):
            for r in M:
                x, y = r[i], r[j]
                r[i], r[j] = a * x + b * y, c * x + d * y

    pc = 0
    for r in range(len(rows)):
        if pc == n:
            break
        for j in range(pc + 1, n):
            b = rows[r][j]
            if b == 0:
                continue
            a = rows[r][pc]
            g, s, t = xgcd(a, b)
            # det [[s, -b/g], [t, a/g]] = 1
            col_combine(pc, j, s, t, -b // g, a // g)
        if rows[r][pc] != 0:
            pc += 1
    return [tuple(U[i][j] for i in range(n)) for j in range(pc, n)]
