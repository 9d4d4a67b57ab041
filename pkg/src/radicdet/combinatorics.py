"""Ranking, unranking and succession of ascending index sequences.

A combination is represented as a tuple of 1-based column indices,
strictly increasing, drawn from {1..n}.  The dictionary (lexicographic)
order over all m-element combinations is indexed by plain Python ints,
so ranks are exact at any size.

The rank <-> combination bijection runs off a small Pascal grid
(:class:`BinomialTable`) instead of recomputing binomials, which keeps
the number of table lookups per unrank linear in m + (n - m) and makes
the lookup count instrumentable via :class:`LookupCounter`.
"""

from __future__ import annotations

from .errors import RankRangeError


def binomial(n: int, k: int) -> int:
    """Exact C(n, k) for non-negative integers; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial expects non-negative arguments")
    if k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


class LookupCounter:
    """Per-call counter of Pascal-grid accesses, for cost instrumentation."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


class BinomialTable:
    """Pascal grid with ``cell(j, i) = C(i + j, j)``.

    Rows run j = 0..m-1 and columns i = 0..n-m, so the grid holds every
    binomial the unranking walk can touch.  Reading the last column from
    the bottom row upward gives the place weights
    C(n-1, m-1), C(n-2, m-2), ..., C(n-m, 0).

    Immutable after construction; safe to share across workers.
    """

    __slots__ = ("m", "n", "grid", "combination_count")

    def __init__(self, m: int, n: int):
        if m < 1 or m > n:
            raise ValueError(f"table requires 1 <= m <= n, got m={m}, n={n}")
        self.m = m
        self.n = n
        width = n - m + 1
        grid = [[1] * width]
        for _ in range(1, m):
            above = grid[-1]
            row = [1] * width
            for i in range(1, width):
                row[i] = row[i - 1] + above[i]
            grid.append(row)
        self.grid = grid
        # Corner cell is C(n-1, m-1); scale up to C(n, m) = C(n-1, m-1) * n / m.
        self.combination_count = grid[m - 1][n - m] * n // m

    def lookup(self, j: int, i: int, counter: LookupCounter | None = None) -> int:
        """Return cell (j, i) = C(i + j, j), counting the access if asked."""
        if j < 0 or j >= self.m or i < 0 or i > self.n - self.m:
            raise IndexError(f"cell ({j}, {i}) outside {self.m}x{self.n - self.m + 1} grid")
        if counter is not None:
            counter.count += 1
        return self.grid[j][i]

    def place_weights(self) -> list[int]:
        """Last column read bottom-up: the weight of each sequence place."""
        col = self.n - self.m
        return [self.grid[j][col] for j in range(self.m - 1, -1, -1)]


def build_table(m: int, n: int) -> BinomialTable:
    """Build the Pascal grid for m-element combinations of {1..n}."""
    return BinomialTable(m, n)


def validate_combination(indices, n: int) -> tuple:
    """Check strict increase and 1..n bounds; return the indices as a tuple."""
    c = tuple(indices)
    prev = 0
    for v in c:
        if not isinstance(v, int):
            raise ValueError(f"combination entries must be ints, got {v!r}")
        if v <= prev:
            raise ValueError(f"combination {c} is not strictly increasing")
        prev = v
    if c and (c[0] < 1 or c[-1] > n):
        raise ValueError(f"combination {c} out of bounds for n={n}")
    return c


def _check_table(table, n, m):
    if table is None:
        return BinomialTable(m, n)
    if table.m != m or table.n != n:
        raise ValueError(
            f"table built for (m={table.m}, n={table.n}), need (m={m}, n={n})")
    return table


def unrank(q: int, n: int, m: int, table: BinomialTable | None = None,
           counter: LookupCounter | None = None) -> tuple:
    """Return the q-th m-combination of {1..n} in dictionary order.

    Walks the Pascal grid the way a positional number system is decoded:
    at place ``pos`` the candidate value x advances while q still covers
    C(n - x, m - pos) later sequences, then x is fixed.  unrank(0) is the
    first member [1..m]; unrank(C(n,m) - 1) is [n-m+1..n].
    """
    if m < 0 or n < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    if m == 0:
        if q != 0:
            raise RankRangeError(f"rank {q} out of range for C({n},0) = 1")
        return ()
    table = _check_table(table, n, m)
    if q < 0 or q >= table.combination_count:
        raise RankRangeError(
            f"rank {q} out of range [0, C({n},{m}) = {table.combination_count})")
    out = []
    x = 1
    for pos in range(1, m + 1):
        j = m - pos
        while True:
            below = table.lookup(j, n - m - x + pos, counter)
            if q < below:
                break
            q -= below
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def rank(indices, n: int, table: BinomialTable | None = None) -> int:
    """Rank of a combination: how many m-combinations of {1..n} precede it."""
    c = validate_combination(indices, n)
    m = len(c)
    if m == 0:
        return 0
    table = _check_table(table, n, m)
    q = 0
    x = 1
    for pos, chosen in enumerate(c, start=1):
        j = m - pos
        while x < chosen:
            q += table.lookup(j, n - m - x + pos)
            x += 1
        x = chosen + 1
    return q


def _successor(c: tuple, n: int, m: int):
    # Rightmost place still below its maximum n - (m - 1 - i) advances;
    # everything after it restarts consecutively.
    i = m - 1
    while i >= 0 and c[i] == n - (m - 1 - i):
        i -= 1
    if i < 0:
        return None
    nxt = c[i] + 1
    return c[:i] + tuple(range(nxt, nxt + m - i))


def successor(indices, n: int):
    """Next combination in dictionary order, or None after [n-m+1..n]."""
    c = validate_combination(indices, n)
    return _successor(c, n, len(c))


def enumerate_range(q_start: int, count: int, n: int, m: int,
                    table: BinomialTable | None = None):
    """Yield the combinations of ranks q_start .. q_start + count - 1.

    One unrank seeds the stream; each further element is a successor
    step, so a worker can traverse its slice of the rank space without
    touching any other slice.
    """
    if count < 0:
        raise RankRangeError(f"count must be non-negative, got {count}")
    if count == 0:
        return
    if m == 0:
        total = 1
    else:
        table = _check_table(table, n, m)
        total = table.combination_count
    if q_start < 0 or q_start + count > total:
        raise RankRangeError(
            f"range [{q_start}, {q_start + count}) exceeds [0, C({n},{m}) = {total})")
    c = unrank(q_start, n, m, table)
    yield c
    for _ in range(count - 1):
        c = _successor(c, n, m)
        yield c
