#!/usr/bin/env python3
"""How the parallel evaluation carves up the work.

The term count C(n, m) explodes quickly, but rank-space chunking makes
the sum embarrassingly parallel: each worker unranks the first
combination of its chunk and walks successors from there, touching
nothing owned by the others.  Merging partial sums in fixed chunk order
keeps exact results identical to the sequential path and float results
bit-stable run to run.

Pass --big for a heavier timing run (a few tens of seconds).
"""

import struct
import sys
import time

from radicdet import FLOAT, binomial, plan_chunks, radic_det_parallel, radic_det_sequential
from radicdet.cli import random_matrix

print("Chunk plan for C(8,5) = 56 terms over 4 workers:")
for i, (start, count) in enumerate(plan_chunks(8, 5, 4).chunks):
    print(f"  worker {i}: ranks {start}..{start + count - 1}")
print("When the split is uneven the first chunks absorb the remainder:")
print(f"  5 workers -> {plan_chunks(8, 5, 5).chunks}\n")

m, n = (8, 24) if "--big" in sys.argv[1:] else (6, 20)
terms = binomial(n, m)
print(f"Timing a {m}x{n} float matrix: {terms} terms.")
matrix = random_matrix(m, n, FLOAT, seed=20240801)

start = time.perf_counter()
seq = radic_det_sequential(matrix)
t_seq = time.perf_counter() - start
print(f"  sequential:        {t_seq * 1000:9.1f} ms -> {seq.value:.17g}")

for workers in (2, 4):
    start = time.perf_counter()
    par = radic_det_parallel(matrix, workers)
    t_par = time.perf_counter() - start
    print(f"  {workers} workers:         {t_par * 1000:9.1f} ms -> {par.value:.17g}"
          f"   (speedup {t_seq / t_par:.2f}x)")

print("\nDeterminism check: two 4-worker runs, compared bit for bit:")
r1 = radic_det_parallel(matrix, 4).value
r2 = radic_det_parallel(matrix, 4).value
same = struct.pack('<d', r1) == struct.pack('<d', r2)
print(f"  {r1:.17g} vs {r2:.17g} -> identical bits: {same}")

print("\nExact mode is associative, so any worker count gives the same integer:")
exact = random_matrix(5, 14, "exact", seed=11)
values = {w: radic_det_parallel(exact, w).value for w in (1, 2, 3, 4, 7, 8)}
print(f"  {sorted(set(values.values()))!r} from worker counts {sorted(values)}")
