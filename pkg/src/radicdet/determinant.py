"""Rectangular (Radic) determinant, sequential evaluation.

For an m x n matrix with m <= n the determinant is the sum, over every
strictly increasing choice of m columns j_1 < ... < j_m, of

    (-1)^(r + s) * det(sub-matrix of those columns)

with r = 1 + 2 + ... + m and s = j_1 + ... + j_m.  For m > n the value
is 0 by definition; for m = n the single term has sign +1 (s = r) and
the ordinary determinant is recovered.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import BinomialTable, _successor, binomial, unrank
from .errors import CapacityError
from .linalg import EXACT, Matrix, _det_exact_rows, _det_float_rows

# Refuse enumerations larger than this unless the caller overrides:
# the term count C(n, m) grows exponentially in min(m, n - m).
DEFAULT_TERM_CAP = 10 ** 8


@dataclass(frozen=True)
class RadicResult:
    """Determinant value plus the size and kind of the evaluation."""

    value: object          # int in exact mode, float in float mode
    term_count: int        # C(n, m); 0 when m > n
    mode: str              # "exact" | "float"


def term_sign(indices, m: int) -> int:
    """+1 or -1 for one combination: parity of r + s.

    r depends only on the row count, s is the sum of the chosen 1-based
    column indices, so the sign is fixed by the combination alone.
    """
    if len(indices) != m:
        raise ValueError(f"combination has {len(indices)} entries, expected {m}")
    r = m * (m + 1) // 2
    s = sum(indices)
    return 1 if (r + s) % 2 == 0 else -1


def _check_term_cap(n, m, max_terms):
    total = binomial(n, m)
    if max_terms is not None and total > max_terms:
        raise CapacityError(
            f"C({n},{m}) = {total} terms exceeds the cap of {max_terms}; "
            "raise max_terms (or pass --force on the command line) to proceed")
    return total


def _sum_terms(entries, kind, n, m, table, start, count):
    """Signed sub-determinant sum over ranks [start, start + count).

    Shared by the sequential path (one full-range call) and by each
    parallel chunk: one unrank seeds the walk, successor steps do the
    rest, and accumulation is strictly in dictionary order so float
    results are reproducible run to run.
    """
    exact = kind == EXACT
    acc = 0 if exact else 0.0
    if count <= 0:
        return acc
    det_rows = _det_exact_rows if exact else _det_float_rows
    r = m * (m + 1) // 2
    comb = unrank(start, n, m, table)
    while True:
        sub = [[row[j - 1] for j in comb] for row in entries]
        d = det_rows(sub, m)
        if (r + sum(comb)) % 2 == 0:
            acc += d
        else:
            acc -= d
        count -= 1
        if count == 0:
            return acc
        comb = _successor(comb, n, m)


def radic_det_sequential(a: Matrix, max_terms: int | None = DEFAULT_TERM_CAP) -> RadicResult:
    """Evaluate the rectangular determinant term by term, single-threaded.

    Enumeration proceeds in dictionary order via successor iteration.
    Exact mode accumulates Python ints; float mode accumulates doubles
    in that same fixed order.
    """
    m, n = a.rows, a.cols
    one = 1 if a.kind == EXACT else 1.0
    if m > n:
        return RadicResult(one * 0, 0, a.kind)
    if m == 0:
        # Single empty combination, r = s = 0, empty product = 1.
        return RadicResult(one, 1, a.kind)
    total = _check_term_cap(n, m, max_terms)
    table = BinomialTable(m, n)
    value = _sum_terms(a.entries, a.kind, n, m, table, 0, total)
    return RadicResult(value, total, a.kind)
