import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radicdet import (
    LookupCounter,
    RankRangeError,
    binomial,
    build_table,
    enumerate_range,
    rank,
    successor,
    unrank,
)
from radicdet.oracle import combinations_bruteforce


def test_binomial_values():
    assert binomial(8, 5) == 56
    assert binomial(12, 6) == 924
    for n in (0, 1, 7, 40):
        assert binomial(n, 0) == 1
    assert binomial(3, 5) == 0          # k > n
    assert binomial(40, 12) == 5586853480


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -2)


def test_build_table_5_of_8_grid():
    t = build_table(5, 8)
    assert t.grid == [
        [1, 1, 1, 1],
        [1, 2, 3, 4],
        [1, 3, 6, 10],
        [1, 4, 10, 20],
        [1, 5, 15, 35],
    ]
    assert t.combination_count == 56


def test_build_table_degenerate():
    t = build_table(1, 1)
    assert t.grid == [[1]]
    assert t.combination_count == 1


def test_build_table_place_weights():
    assert build_table(3, 6).place_weights() == [10, 4, 1]
    assert build_table(5, 8).place_weights() == [35, 20, 10, 4, 1]


def test_build_table_invariants():
    for m, n in [(1, 5), (3, 6), (5, 8), (4, 4), (6, 13)]:
        t = build_table(m, n)
        width = n - m + 1
        assert all(t.grid[0][i] == 1 for i in range(width))
        assert all(t.grid[j][0] == 1 for j in range(m))
        for j in range(1, m):
            for i in range(1, width):
                assert t.grid[j][i] == t.grid[j][i - 1] + t.grid[j - 1][i]
        # every cell is C(i + j, j)
        for j in range(m):
            for i in range(width):
                assert t.grid[j][i] == binomial(i + j, j)


def test_build_table_rejects_bad_shapes():
    with pytest.raises(ValueError):
        build_table(0, 4)
    with pytest.raises(ValueError):
        build_table(5, 4)


def test_unrank_known_points():
    t = build_table(5, 8)
    assert unrank(49, 8, 5, t) == (2, 5, 6, 7, 8)
    assert unrank(0, 8, 5, t) == (1, 2, 3, 4, 5)
    assert unrank(55, 8, 5, t) == (4, 5, 6, 7, 8)
    assert unrank(20, 8, 5, t) == (1, 3, 4, 5, 6)
    assert unrank(0, 9, 4) == (1, 2, 3, 4)
    assert unrank(binomial(9, 4) - 1, 9, 4) == (6, 7, 8, 9)


def test_unrank_out_of_range():
    t = build_table(5, 8)
    with pytest.raises(RankRangeError):
        unrank(56, 8, 5, t)
    with pytest.raises(RankRangeError):
        unrank(-1, 8, 5, t)


def test_unrank_mismatched_table():
    t = build_table(4, 8)
    with pytest.raises(ValueError):
        unrank(0, 8, 5, t)


def test_unrank_empty_combination():
    assert unrank(0, 6, 0) == ()
    with pytest.raises(RankRangeError):
        unrank(1, 6, 0)


def test_rank_known_points():
    t = build_table(5, 8)
    assert rank((2, 5, 6, 7, 8), 8, t) == 49
    assert rank((1, 2, 4, 5, 7), 8, t) == 11
    assert rank(tuple(range(1, 6)), 8, t) == 0
    assert rank((), 5) == 0


def test_rank_rejects_invalid_combinations():
    with pytest.raises(ValueError):
        rank((2, 2, 3), 8)
    with pytest.raises(ValueError):
        rank((3, 1), 8)
    with pytest.raises(ValueError):
        rank((1, 9), 8)
    with pytest.raises(ValueError):
        rank((0, 1), 8)


def test_successor_steps():
    assert successor((1, 2, 3, 4, 5), 8) == (1, 2, 3, 4, 6)
    assert successor((1, 2, 6, 7, 8), 8) == (1, 3, 4, 5, 6)
    assert successor((4, 5, 6, 7, 8), 8) is None
    assert successor((), 5) is None


def test_enumerate_range_full_5_of_8(combos_5_of_8):
    t = build_table(5, 8)
    assert list(enumerate_range(0, 56, 8, 5, t)) == combos_5_of_8


def test_enumerate_range_slices():
    t = build_table(5, 8)
    assert list(enumerate_range(49, 1, 8, 5, t)) == [(2, 5, 6, 7, 8)]
    assert list(enumerate_range(10, 0, 8, 5, t)) == []
    with pytest.raises(RankRangeError):
        list(enumerate_range(50, 7, 8, 5, t))


def test_enumeration_matches_recursive_oracle():
    for n in range(0, 11):
        for m in range(0, n + 1):
            t = build_table(m, n) if m else None
            got = list(enumerate_range(0, binomial(n, m), n, m, t))
            assert got == combinations_bruteforce(n, m)


def test_full_enumeration_cardinality_and_order():
    for n, m in [(8, 5), (10, 3), (7, 7), (9, 1)]:
        count = 0
        c = tuple(range(1, m + 1))
        seen = set()
        while c is not None:
            assert all(a < b for a, b in zip(c, c[1:]))
            seen.add(c)
            nxt = successor(c, n)
            if nxt is not None:
                assert c < nxt    # tuple comparison is dictionary order
            c = nxt
            count += 1
        assert count == binomial(n, m)
        assert len(seen) == count


def test_lookup_counter_bound():
    # Instrumented cost of one unrank: at most 2 (m+1) (n-m+1) grid reads.
    for n in range(1, 13):
        for m in range(1, n + 1):
            t = build_table(m, n)
            bound = 2 * (m + 1) * (n - m + 1)
            for q in range(t.combination_count):
                counter = LookupCounter()
                unrank(q, n, m, t, counter)
                assert counter.count <= bound, (n, m, q, counter.count)


@given(st.data())
@settings(max_examples=300, deadline=None)
def test_rank_unrank_roundtrip(data):
    n = data.draw(st.integers(min_value=0, max_value=16))
    m = data.draw(st.integers(min_value=0, max_value=n))
    q = data.draw(st.integers(min_value=0, max_value=binomial(n, m) - 1))
    t = build_table(m, n) if m else None
    c = unrank(q, n, m, t)
    assert len(c) == m
    assert rank(c, n, t) == q


@given(st.data())
@settings(max_examples=200, deadline=None)
def test_successor_matches_unrank_of_next(data):
    n = data.draw(st.integers(min_value=1, max_value=14))
    m = data.draw(st.integers(min_value=1, max_value=n))
    total = binomial(n, m)
    q = data.draw(st.integers(min_value=0, max_value=total - 1))
    t = build_table(m, n)
    c = unrank(q, n, m, t)
    if q + 1 < total:
        assert successor(c, n) == unrank(q + 1, n, m, t)
    else:
        assert successor(c, n) is None


def test_table_is_shareable_and_pure():
    t = build_table(5, 8)
    first = unrank(30, 8, 5, t)
    for _ in range(3):
        assert unrank(30, 8, 5, t) == first
    assert t.grid[0][0] == 1


def test_all_5_of_8_is_strictly_increasing_ground_truth(combos_5_of_8):
    # Self-check of the frozen list: 56 distinct ascending rows in order.
    assert len(combos_5_of_8) == 56
    assert len(set(combos_5_of_8)) == 56
    assert combos_5_of_8 == sorted(combos_5_of_8)
    for c in combos_5_of_8:
        assert all(a < b for a, b in zip(c, c[1:]))
