#!/usr/bin/env python3
"""Tour of the combination-ordering machinery.

Every m-element subset of {1..n} can be written as a strictly
increasing index tuple, and those tuples have a natural dictionary
order.  This demo builds the Pascal grid that prices each position,
then jumps straight to an arbitrary rank, inverts the jump, and walks
the order with successor steps.
"""

from radicdet import (
    binomial,
    build_table,
    enumerate_range,
    rank,
    successor,
    unrank,
)

N, M = 8, 5

print(f"All {binomial(N, M)} ascending 5-tuples over {{1..{N}}}, in dictionary order.\n")

table = build_table(M, N)
print("Pascal grid (row j, column i holds C(i+j, j)):")
for j, row in enumerate(table.grid):
    print(f"  j={j}:  " + "  ".join(f"{v:3d}" for v in row))
print("\nPlace weights (how many sequences a +1 at each place skips):")
print(" ", table.place_weights())

print("\nJump directly to rank 49, no need to enumerate the 49 before it:")
c49 = unrank(49, N, M, table)
print(f"  unrank(49) = {list(c49)}")
print(f"  rank({list(c49)}) = {rank(c49, N, table)}  (round trip)")

print("\nFirst member and a few successor steps:")
c = unrank(0, N, M, table)
for q in range(6):
    print(f"  q={q}: {list(c)}")
    c = successor(c, N)

print("\nLast member has no successor:")
last = unrank(binomial(N, M) - 1, N, M, table)
print(f"  {list(last)} -> {successor(last, N)}")

print("\nFull listing, five ranks per line:")
combos = list(enumerate_range(0, binomial(N, M), N, M, table))
for base in range(0, len(combos), 5):
    row = "   ".join(f"q={base + k:2d}:{''.join(str(x) for x in combos[base + k])}"
                     for k in range(min(5, len(combos) - base)))
    print("  " + row)
