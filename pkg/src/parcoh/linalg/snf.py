"""Smith normal form over the integers.

Matrices are plain lists of integer rows. Because a list of zero rows does not
remember its column count, functions that may see empty matrices take the
shape explicitly.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def mat_mul(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: int, cols: int
) -> Matrix:
    """``a @ b`` for an ``r x inner`` and an ``inner x cols`` matrix."""
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        target = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        target[j] += x * brow[j]
    return out


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def transpose(a: Sequence[Sequence[int]], cols: int) -> Matrix:
    return [[row[j] for row in a] for j in range(cols)]


@dataclass(frozen=True)
class SNFResult:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular.

    ``D`` is ``rows x cols`` and diagonal, with nonnegative entries forming a
    divisibility chain ``d_1 | d_2 | ...`` (zeros last).
    """

    U: Matrix
    D: Matrix
    V: Matrix
    rows: int
    cols: int

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(self.rows, self.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class _Reducer:
    """Row and column operations on ``A`` mirrored into ``U`` and ``V``."""

    def __init__(self, m: Sequence[Sequence[int]], rows: int, cols: int):
        self.A = [list(row) for row in m]
        self.U = identity(rows)
        self.V = identity(cols)
        self.rows = rows
        self.cols = cols

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.A[i], self.A[j] = self.A[j], self.A[i]
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for row in self.A:
                row[i], row[j] = row[j], row[i]
            for row in self.V:
                row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, q: int) -> None:
        """row[target] += q * row[source]"""
        for mat in (self.A, self.U):
            src, dst = mat[source], mat[target]
            for k, x in enumerate(src):
                if x:
                    dst[k] += q * x

    def add_col(self, target: int, source: int, q: int) -> None:
        """col[target] += q * col[source]"""
        for mat in (self.A, self.V):
            for row in mat:
                if row[source]:
                    row[target] += q * row[source]

    def negate_row(self, i: int) -> None:
        for mat in (self.A, self.U):
            mat[i] = [-x for x in mat[i]]

    def pivot_position(self, t: int) -> Optional[Tuple[int, int]]:
        """Smallest nonzero ``|a|`` in the trailing block, row-major ties."""
        best = None
        best_value = 0
        for i in range(t, self.rows):
            row = self.A[i]
            for j in range(t, self.cols):
                x = abs(row[j])
                if x and (best is None or x < best_value):
                    best, best_value = (i, j), x
                    if x == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> None:
        """Zero out row ``t`` and column ``t`` beyond the pivot."""
        A = self.A
        while True:
            p = A[t][t]
            for i in range(t + 1, self.rows):
                if A[i][t]:
                    self.add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, self.cols):
                if A[t][j]:
                    self.add_col(j, t, -(A[t][j] // p))
            # a nonzero remainder is smaller than the pivot: make it the pivot
            smallest = None
            for i in range(t + 1, self.rows):
                if A[i][t] and (smallest is None or abs(A[i][t]) < smallest[0]):
                    smallest = (abs(A[i][t]), i, None)
            for j in range(t + 1, self.cols):
                if A[t][j] and (smallest is None or abs(A[t][j]) < smallest[0]):
                    smallest = (abs(A[t][j]), None, j)
            if smallest is None:
                return
            _, i, j = smallest
            if i is not None:
                self.swap_rows(t, i)
            else:
                self.swap_cols(t, j)

    def offending_row(self, t: int) -> Optional[int]:
        p = self.A[t][t]
        for i in range(t + 1, self.rows):
            row = self.A[i]
            for j in range(t + 1, self.cols):
                if row[j] % p:
                    return i
        return None


def snf(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> SNFResult:
    """Smith normal form of an integer matrix with transforms.

    Args:
        m: The matrix as a list of rows.
        cols: Column count, required only when ``m`` has no rows.

    The pivot at each step is the nonzero entry of least absolute value in
    the remaining block, the first one in row-major order on ties. The result
    is deterministic.
    """
    rows = len(m)
    if cols is None:
        cols = len(m[0]) if rows else 0
    if any(len(row) != cols for row in m):
        raise ValueError(f"matrix rows must all have length {cols}")
    r = _Reducer(m, rows, cols)
    for t in range(min(rows, cols)):
        position = r.pivot_position(t)
        if position is None:
            break
        r.swap_rows(t, position[0])
        r.swap_cols(t, position[1])
        while True:
            r.clear_cross(t)
            bad = r.offending_row(t)
            if bad is None:
                break
            r.add_row(t, bad, 1)
        if r.A[t][t] < 0:
            r.negate_row(t)
    return SNFResult(U=r.U, D=r.A, V=r.V, rows=rows, cols=cols)


def is_smith_form(result: SNFResult) -> bool:
    """Check that ``D`` is diagonal with a nonnegative divisibility chain."""
    D = result.D
    for i in range(result.rows):
        for j in range(result.cols):
            if i != j and D[i][j]:
                return False
    diag = result.diagonal
    if any(d < 0 for d in diag):
        return False
    for a, b in zip(diag, diag[1:]):
        if a == 0 and b != 0:
            return False
        if a and b % a:
            return False
    return True
