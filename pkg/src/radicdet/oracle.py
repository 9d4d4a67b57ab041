"""Brute-force reference implementations, for tests only.

Everything here is deliberately naive and shares no code with the
production modules: combinations come from plain recursive descent and
determinants from cofactor expansion, so agreement between the two
paths is meaningful evidence.  Costs are factorial; the caps exist to
keep accidental large calls from hanging a test run.
"""

from __future__ import annotations

import math

from .errors import CapacityError
from .linalg import EXACT, Matrix

DEFAULT_ORACLE_CAP = 200_000


def combinations_bruteforce(n: int, m: int, cap: int = DEFAULT_ORACLE_CAP) -> list:
    """All m-subsets of {1..n} as 1-based tuples, lexicographic order."""
    if m < 0 or n < 0:
        raise ValueError("n and m must be non-negative")
    if m > n:
        return []
    if math.comb(n, m) > cap:
        raise CapacityError(f"C({n},{m}) = {math.comb(n, m)} exceeds oracle cap {cap}")
    out = []

    def descend(prefix, nxt):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for v in range(nxt, n + 1):
            prefix.append(v)
            descend(prefix, v + 1)
            prefix.pop()

    descend([], 1)
    return out


def det_cofactor(rows) -> int:
    """Determinant by first-row cofactor expansion, O(m!)."""
    m = len(rows)
    if m == 1:
        return rows[0][0]
    total = 0
    for j, lead in enumerate(rows[0]):
        if lead == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = lead * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def radic_det_bruteforce(a: Matrix, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Rectangular determinant evaluated naively; exact kind, m <= 7."""
    if a.kind != EXACT:
        raise ValueError("oracle only handles exact matrices")
    m, n = a.rows, a.cols
    if m > 7:
        raise CapacityError(f"oracle caps cofactor expansion at m = 7, got m = {m}")
    if m > n:
        return 0
    if m == 0:
        return 1
    r = m * (m + 1) // 2
    total = 0
    for comb in combinations_bruteforce(n, m, cap):
        sub = [[row[j - 1] for j in comb] for row in a.entries]
        term = det_cofactor(sub)
        total += term if (r + sum(comb)) % 2 == 0 else -term
    return total
