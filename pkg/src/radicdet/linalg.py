"""Dense rectangular matrices and square-determinant kernels.

Two scalar kinds are supported and never mixed:

* ``"exact"``: arbitrary-precision Python ints; determinants come out
  exact via fraction-free (Bareiss) elimination.
* ``"float"``: IEEE doubles; determinants via row-pivoted Gaussian
  elimination with a fixed tie-break, so results are deterministic for
  a given input.
"""

from __future__ import annotations

EXACT = "exact"
FLOAT = "float"

_KINDS = (EXACT, FLOAT)


class Matrix:
    """Dense row-major matrix of one scalar kind.

    ``entries`` is a list of row lists.  Instances are treated as
    immutable once constructed; every kernel works on copies.
    Zero-row and zero-column shapes are allowed (the rectangular
    determinant of a 0 x n matrix is defined).
    """

    def __init__(self, entries, kind: str = EXACT):
        if kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
        rows = [list(r) for r in entries]
        cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {cols}")
        if kind == EXACT:
            for row in rows:
                for v in row:
                    if not isinstance(v, int) or isinstance(v, bool):
                        raise ValueError(f"exact matrix requires int entries, got {v!r}")
        else:
            rows = [[float(v) for v in row] for row in rows]
        self.entries = rows
        self.rows = len(rows)
        self.cols = cols
        self.kind = kind

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.kind == other.kind
                and self.entries == other.entries
                and self.shape == other.shape)

    def __repr__(self):
        return f"Matrix({self.entries!r}, kind={self.kind!r})"


def extract_submatrix(a: Matrix, indices) -> Matrix:
    """Square matrix made of the columns picked by a 1-based combination.

    Column t of the result is column indices[t] of ``a``; all rows are
    kept in order, so the result is m x m for an m-row input.
    """
    m = a.rows
    if len(indices) != m:
        raise ValueError(f"need {m} column indices for a {m}-row matrix, got {len(indices)}")
    cols = []
    for j in indices:
        if not 1 <= j <= a.cols:
            raise ValueError(f"column index {j} out of range 1..{a.cols}")
        cols.append(j - 1)
    return Matrix([[row[j] for j in cols] for row in a.entries], kind=a.kind)


def _det_exact_rows(rows, m):
    """Bareiss elimination over a scratch list-of-lists; exact int result."""
    if m == 1:
        return rows[0][0]
    sign = 1
    prev = 1
    for k in range(m - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, m):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = rows[k]
        pivot = pivot_row[k]
        for r in range(k + 1, m):
            row = rows[r]
            lead = row[k]
            for c in range(k + 1, m):
                # Exact by the Bareiss identity: prev divides the numerator.
                row[c] = (row[c] * pivot - lead * pivot_row[c]) // prev
            row[k] = 0
        prev = pivot
    return sign * rows[m - 1][m - 1]


def _det_float_rows(rows, m):
    """Partial-pivoted elimination; pivot = max |entry|, first one on ties."""
    det = 1.0
    for k in range(m):
        p = k
        best = abs(rows[k][k])
        for r in range(k + 1, m):
            v = abs(rows[r][k])
            if v > best:
                best = v
                p = r
        if best == 0.0:
            return 0.0
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            det = -det
        pivot_row = rows[k]
        pivot = pivot_row[k]
        det *= pivot
        for r in range(k + 1, m):
            row = rows[r]
            f = row[k] / pivot
            if f != 0.0:
                for c in range(k + 1, m):
                    row[c] -= f * pivot_row[c]
    return det


def det_square_exact(a: Matrix) -> int:
    """Exact determinant of a square exact-kind matrix.

    Fraction-free elimination keeps every intermediate an integer, so
    there is no rounding and no rational blow-up.
    """
    if a.kind != EXACT:
        raise ValueError("det_square_exact requires an exact-kind matrix")
    if not a.is_square() or a.rows == 0:
        raise ValueError(f"det_square_exact requires a square matrix, got {a.shape}")
    return _det_exact_rows([row[:] for row in a.entries], a.rows)


def det_square_float(a: Matrix) -> float:
    """Determinant of a square float-kind matrix via pivoted elimination.

    Deterministic for a fixed input: the pivot is the largest absolute
    value in the column, ties broken by the lowest row index, and the
    sign is tracked through row swaps.  Overflow follows IEEE semantics
    (an infinite result is returned, not trapped).
    """
    if a.kind != FLOAT:
        raise ValueError("det_square_float requires a float-kind matrix")
    if not a.is_square() or a.rows == 0:
        raise ValueError(f"det_square_float requires a square matrix, got {a.shape}")
    return _det_float_rows([row[:] for row in a.entries], a.rows)
