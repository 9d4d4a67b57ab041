"""Chunked parallel evaluation of the rectangular determinant.

The rank interval [0, C(n, m)) is split into contiguous, balanced
chunks, one per worker.  Unranking makes every chunk independent: a
worker seeds its walk with a single unrank at the chunk start and then
iterates successors, so no worker waits on another's combinations.
Partial sums are merged in ascending chunk order on the calling thread,
which keeps exact mode identical to the sequential path and makes float
mode bit-reproducible for a fixed worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .combinatorics import BinomialTable, binomial
from .determinant import DEFAULT_TERM_CAP, RadicResult, _check_term_cap, _sum_terms
from .linalg import EXACT, Matrix

# Below this many total terms the chunks are evaluated in-process:
# process start-up would dwarf the work, and the merged result is
# identical either way because each chunk runs the same sequential code.
PROCESS_MIN_TERMS = 20_000


def resolve_workers(workers: int) -> int:
    """Map the user's worker count to an actual one (0 = available CPUs)."""
    if workers < 0:
        raise ValueError(f"workers must be >= 0, got {workers}")
    if workers == 0:
        return os.cpu_count() or 1
    return workers


@dataclass(frozen=True)
class ChunkPlan:
    """Partition of [0, total_terms) into per-worker (start, count) ranges."""

    total_terms: int
    chunks: tuple          # ((start_rank, count), ...) ascending, sizes within 1
    workers: int


def plan_chunks(n: int, m: int, workers: int) -> ChunkPlan:
    """Balanced contiguous split of the rank space over up to ``workers`` chunks.

    A pure function of (n, m, workers).  When workers does not divide
    C(n, m) the first remainder chunks carry one extra term; when there
    are fewer terms than workers the excess workers get no chunk at all.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    total = binomial(n, m) if m <= n else 0
    k = min(workers, total)
    chunks = []
    start = 0
    if k:
        base, extra = divmod(total, k)
        for i in range(k):
            size = base + (1 if i < extra else 0)
            chunks.append((start, size))
            start += size
    return ChunkPlan(total, tuple(chunks), workers)


def _eval_chunk(args):
    entries, kind, n, m, start, count = args
    table = BinomialTable(m, n)
    return _sum_terms(entries, kind, n, m, table, start, count)


def radic_det_parallel(a: Matrix, workers: int = 0,
                       max_terms: int | None = DEFAULT_TERM_CAP,
                       processes: bool | None = None) -> RadicResult:
    """Rectangular determinant over a chunk plan for ``workers`` workers.

    workers = 0 resolves to the available hardware parallelism.  The
    ``processes`` switch picks the execution vehicle only: None lets the
    term count decide, True forces a process pool, False keeps every
    chunk in-process.  The emitted combination stream and the merge
    order never change, so the result does not depend on the switch.
    """
    m, n = a.rows, a.cols
    one = 1 if a.kind == EXACT else 1.0
    if m > n:
        # Defined as zero; no plan, no workers spawned.
        return RadicResult(one * 0, 0, a.kind)
    if m == 0:
        return RadicResult(one, 1, a.kind)
    _check_term_cap(n, m, max_terms)
    k = resolve_workers(workers)
    plan = plan_chunks(n, m, k)
    jobs = [(a.entries, a.kind, n, m, start, count) for start, count in plan.chunks]
    if processes is None:
        processes = plan.total_terms >= PROCESS_MIN_TERMS
    use_pool = processes and len(jobs) > 1
    if use_pool:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            partials = list(pool.map(_eval_chunk, jobs))
    else:
        partials = [_eval_chunk(job) for job in jobs]
    if a.kind == EXACT:
        value = sum(partials)
    else:
        value = 0.0
        for p in partials:       # ascending chunk order, sequential merge
            value += p
    return RadicResult(value, plan.total_terms, a.kind)
