"""Determinants of rectangular matrices.

An m x n matrix with m <= n has a determinant defined as the signed sum
of the determinants of all C(n, m) column-selected m x m sub-matrices.
This package evaluates it exactly (arbitrary-precision integers) or in
floating point, sequentially or over a pool of workers that partition
the combination space by rank.
"""

from .combinatorics import (
    BinomialTable,
    LookupCounter,
    binomial,
    build_table,
    enumerate_range,
    rank,
    successor,
    unrank,
)
from .determinant import DEFAULT_TERM_CAP, RadicResult, radic_det_sequential, term_sign
from .errors import CapacityError, MatrixParseError, RankRangeError
from .linalg import (
    EXACT,
    FLOAT,
    Matrix,
    det_square_exact,
    det_square_float,
    extract_submatrix,
)
from .matrixio import format_value, load_matrix, parse_matrix
from .parallel import ChunkPlan, plan_chunks, radic_det_parallel, resolve_workers

__version__ = "0.1.0"

__all__ = [
    "BinomialTable",
    "CapacityError",
    "ChunkPlan",
    "DEFAULT_TERM_CAP",
    "EXACT",
    "FLOAT",
    "LookupCounter",
    "Matrix",
    "MatrixParseError",
    "RadicResult",
    "RankRangeError",
    "binomial",
    "build_table",
    "det_square_exact",
    "det_square_float",
    "enumerate_range",
    "extract_submatrix",
    "format_value",
    "load_matrix",
    "parse_matrix",
    "plan_chunks",
    "radic_det_parallel",
    "radic_det_sequential",
    "rank",
    "resolve_workers",
    "successor",
    "term_sign",
    "unrank",
]
