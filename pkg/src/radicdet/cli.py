"""Command-line surface: compute | unrank | rank | enumerate | bench.

Exit codes: 0 success, 2 parse error, 3 range/capacity error, 4 I/O
error.  The tool refuses term counts above --max-terms (default 1e8)
unless --force is given, because the work grows as C(n, m).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

from .combinatorics import binomial, build_table, enumerate_range, rank, unrank
from .determinant import DEFAULT_TERM_CAP
from .errors import CapacityError, MatrixParseError, RankRangeError
from .linalg import EXACT, FLOAT, Matrix
from .matrixio import format_value, load_matrix, result_fields
from .parallel import radic_det_parallel, resolve_workers

BENCH_SEED = 20240801


@dataclass
class RunConfig:
    """Everything cmd_compute needs, straight from the parsed arguments."""

    input: str
    mode: str = EXACT
    workers: int = 1          # 0 = auto-detect
    max_terms: int = DEFAULT_TERM_CAP
    force: bool = False
    format: str = "plain"


def cmd_compute(cfg: RunConfig) -> int:
    matrix = load_matrix(cfg.input, cfg.mode)
    workers = resolve_workers(cfg.workers)
    cap = None if cfg.force else cfg.max_terms
    start = time.perf_counter()
    result = radic_det_parallel(matrix, workers, max_terms=cap)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    fields = result_fields(result, workers, round(elapsed_ms, 3))
    if cfg.format == "json":
        # value stays a decimal string in exact mode, a number in float mode
        print(json.dumps(fields))
    else:
        fields["value"] = format_value(result.value, result.mode)
        for key, val in fields.items():
            print(f"{key} {val}")
    return 0


def cmd_unrank(n: int, m: int, q: int) -> int:
    print(" ".join(map(str, unrank(q, n, m))))
    return 0


def cmd_rank(n: int, indices) -> int:
    print(rank(indices, n))
    return 0


def cmd_enumerate(n: int, m: int, q_start: int, count: int) -> int:
    table = build_table(m, n) if m else None
    for comb in enumerate_range(q_start, count, n, m, table):
        print(" ".join(map(str, comb)))
    return 0


def random_matrix(m: int, n: int, kind: str, seed: int) -> Matrix:
    """Reproducible benchmark input: entries uniform in [-9, 9]."""
    rng = random.Random(seed)
    rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
    return Matrix(rows, kind=kind)


def cmd_bench(n: int, m: int, mode: str, worker_list, seed: int = BENCH_SEED,
              max_terms: int | None = DEFAULT_TERM_CAP) -> int:
    matrix = random_matrix(m, n, mode, seed)
    terms = binomial(n, m) if m <= n else 0
    print(f"bench m={m} n={n} mode={mode} terms={terms} seed={seed}")
    print(f"{'workers':>8}  {'elapsed_ms':>12}  {'speedup':>8}")
    baseline = None
    for w in worker_list:
        resolved = resolve_workers(w)
        start = time.perf_counter()
        radic_det_parallel(matrix, resolved, max_terms=max_terms)
        elapsed = (time.perf_counter() - start) * 1000.0
        if baseline is None:
            baseline = elapsed
        print(f"{resolved:>8}  {elapsed:>12.1f}  {baseline / elapsed:>8.2f}")
    return 0


def _int_list(text: str):
    return [int(tok) for tok in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radicdet",
        description="Determinants of rectangular matrices and the "
                    "combination ordering behind them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="determinant of a matrix file")
    p.add_argument("--input", "-i", required=True, help="matrix file path")
    p.add_argument("--mode", choices=[EXACT, FLOAT], default=EXACT)
    p.add_argument("--workers", type=int, default=1, help="0 = auto")
    p.add_argument("--max-terms", type=int, default=DEFAULT_TERM_CAP)
    p.add_argument("--force", action="store_true",
                   help="ignore the term cap")
    p.add_argument("--format", choices=["plain", "json"], default="plain")

    p = sub.add_parser("unrank", help="q-th combination in dictionary order")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("q", type=int)

    p = sub.add_parser("rank", help="dictionary rank of a combination")
    p.add_argument("n", type=int)
    p.add_argument("indices", nargs="+",
                   help="combination, e.g. 1 2 4 5 7 (commas allowed)")

    p = sub.add_parser("enumerate", help="a run of consecutive combinations")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("q_start", type=int)
    p.add_argument("count", type=int)

    p = sub.add_parser("bench", help="wall time per worker count on a seeded matrix")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--mode", choices=[EXACT, FLOAT], default=FLOAT)
    p.add_argument("--workers", default="1,2,4",
                   help="comma-separated worker counts")
    p.add_argument("--seed", type=int, default=BENCH_SEED)
    p.add_argument("--max-terms", type=int, default=DEFAULT_TERM_CAP)
    p.add_argument("--force", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            cfg = RunConfig(input=args.input, mode=args.mode,
                            workers=args.workers, max_terms=args.max_terms,
                            force=args.force, format=args.format)
            if cfg.max_terms < 1:
                raise ValueError("--max-terms must be >= 1")
            if cfg.workers < 0:
                raise ValueError("--workers must be >= 0")
            return cmd_compute(cfg)
        if args.command == "unrank":
            return cmd_unrank(args.n, args.m, args.q)
        if args.command == "rank":
            flat = []
            for tok in args.indices:
                flat.extend(_int_list(tok))
            return cmd_rank(args.n, flat)
        if args.command == "enumerate":
            return cmd_enumerate(args.n, args.m, args.q_start, args.count)
        if args.command == "bench":
            cap = None if args.force else args.max_terms
            return cmd_bench(args.n, args.m, args.mode,
                             _int_list(args.workers), args.seed, cap)
        raise AssertionError(f"unhandled command {args.command}")
    except MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RankRangeError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry():
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
