"""Division-free matrix helpers over any commutative ring.

Entries only need ``+``, ``-``, ``*`` and truthiness (zero test), so the same
code serves :class:`~hypercert.scalar.ExactScalar` and
:class:`~hypercert.laurent.LaurentPoly` matrices.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any, Iterator, Sequence

from .errors import InputError, VerificationError

Matrix = Sequence[Sequence[Any]]


def check_square(M: Matrix) -> int:
    n = len(M)
    if n == 0:
        raise InputError("empty matrix")
    for row in M:
        if len(row) != n:
            raise InputError(f"matrix is not square: {n} rows, a row of length {len(row)}")
    return n


def _zero_one(M: Matrix):
    x = M[0][0]
    zero = x - x
    return zero, zero + 1


def determinant(M: Matrix):
    """Laplace expansion along successive rows, memoized on the set of used columns.

    O(n * 2^n) ring multiplications; fine for the <= 10x10 matrices used here.
    """
    n = check_square(M)
    zero, one = _zero_one(M)
    memo: dict[int, Any] = {}

    def minor(row: int, used: int):
        if row == n:
            return one
        if used in memo:
            return memo[used]
        total = zero
        pos = 0
        for j in range(n):
            if used >> j & 1:
                continue
            entry = M[row][j]
            if entry:
                term = entry * minor(row + 1, used | (1 << j))
                total = total - term if pos & 1 else total + term
            pos += 1
        memo[used] = total
        return total

    return minor(0, 0)


def submatrix(M: Matrix, rows: Sequence[int], cols: Sequence[int]) -> list[list[Any]]:
    return [[M[i][j] for j in cols] for i in rows]


def cofactor_matrix(M: Matrix) -> list[list[Any]]:
    n = check_square(M)
    if n == 1:
        _, one = _zero_one(M)
        return [[one]]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = determinant(submatrix(M, [r for r in range(n) if r != i],
                                          [c for c in range(n) if c != j]))
            row.append(-minor if (i + j) & 1 else minor)
        out.append(row)
    return out


def matmul(A: Matrix, B: Matrix) -> list[list[Any]]:
    if not A or len(A[0]) != len(B):
        raise InputError("incompatible shapes for matrix product")
    cols = len(B[0])
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = row[0] * B[0][j]
            for k in range(1, len(B)):
                acc = acc + row[k] * B[k][j]
            new.append(acc)
        out.append(new)
    return out


def adjugate(M: Matrix) -> list[list[Any]]:
    """Classical adjoint (transposed cofactor matrix); checks M * adj(M) = det(M) * I."""
    C = cofactor_matrix(M)
    n = len(C)
    adj = [[C[j][i] for j in range(n)] for i in range(n)]
    det = determinant(M)
    prod = matmul(M, adj)
    for i in range(n):
        for j in range(n):
            want = det if i == j else det - det
            if prod[i][j] != want:
                raise VerificationError("M * adj(M) != det(M) * I")
    return adj


def square_minors(M: Matrix) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Any]]:
    """Yield (rows, cols, value) for every square minor of every size."""
    m, k = len(M), len(M[0])
    for size in range(1, min(m, k) + 1):
        for rows in combinations(range(m), size):
            for cols in combinations(range(k), size):
                yield rows, cols, determinant(submatrix(M, rows, cols))
