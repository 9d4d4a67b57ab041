#!/usr/bin/env python3
"""The rectangular determinant, term by term.

An m x n matrix (m <= n) gets a determinant by summing, over every
choice of m columns, the determinant of that square slice times a sign
(-1)^(r+s), where r = 1+2+...+m and s is the sum of the chosen column
indices.  Square matrices recover the ordinary determinant; extra
columns contribute extra signed terms.
"""

import numpy as np

from radicdet import (
    FLOAT,
    Matrix,
    binomial,
    det_square_exact,
    enumerate_range,
    extract_submatrix,
    radic_det_sequential,
    term_sign,
)

print("Smallest interesting case: a 1x2 matrix [3 5].")
a = Matrix([[3, 5]])
print("  terms: +3 (column 1, sign +) and -5 (column 2, sign -)")
print(f"  det = {radic_det_sequential(a).value}\n")

print("A 2x3 matrix, all three column pairs spelled out:")
b = Matrix([[1, 2, 3], [4, 5, 6]])
total = 0
for comb in enumerate_range(0, binomial(3, 2), 3, 2):
    sub = extract_submatrix(b, comb)
    sign = term_sign(comb, 2)
    d = det_square_exact(sub)
    total += sign * d
    print(f"  columns {list(comb)}: sign {sign:+d}, sub-det {d:+d}, term {sign * d:+d}")
print(f"  total = {total}, library says {radic_det_sequential(b).value}\n")

print("Square case reduces to the ordinary determinant (numpy cross-check):")
rng = np.random.default_rng(7)
sq = rng.integers(-9, 10, size=(4, 4))
mine = radic_det_sequential(Matrix(sq.tolist())).value
print(f"  4x4 exact: {mine}, numpy: {np.linalg.det(sq):.6f}\n")

print("Fat shapes and degenerate shapes:")
tall = Matrix([[1], [2], [3]])
print(f"  3x1 (more rows than columns): det = {radic_det_sequential(tall).value} by definition")
dup = Matrix([[2, 7, 1, 5], [2, 7, 1, 5]])
print(f"  duplicate rows: det = {radic_det_sequential(dup).value} exactly\n")

print("Exact mode never rounds: entries way past 64 bits:")
big = 10 ** 25
wide = Matrix([[big, big + 1, big + 2], [big - 1, big, big + 3]])
print(f"  2x3 around 1e25: det = {radic_det_sequential(wide).value}")

print("\nFloat mode on the same shape (17 significant digits):")
widef = Matrix(wide.entries, kind=FLOAT)
print(f"  det = {radic_det_sequential(widef).value:.17g}")
print("  (exact mode is the one to trust when entries are integers)")
