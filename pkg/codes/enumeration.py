"""
rank_macwilliams.codes.enumeration
~~~~~~~~~~~~
Exhaustive codeword enumeration and weight bucketing.

Messages are visited in lexicographic order of their coordinates (the first
coordinate most significant), so the message space splits into contiguous
index ranges that workers can count independently.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Sequence, Tuple

from config import get_settings
from exceptions import EnumerationGuardExceededError
from gfq.field_tower import FieldTower, make_field
from gfq.polynomials import digits
from linalg.matrix_gf import hamming_weight, span_rank

from .data_types import LinearCode, Metric

logger = logging.getLogger(__name__)

Counts = Dict[Metric, List[int]]

CHUNKS_PER_WORKER = 4


def check_guard(size: int, guard: int = None) -> None:
    guard = get_settings().enumeration_guard if guard is None else guard
    if size > guard:
        raise EnumerationGuardExceededError(size, guard)


def _scaled_row(tower: FieldTower, c: int, row: Sequence[int]) -> Tuple[int, ...]:
    return tuple(tower.mul(c, x) for x in row)


def _add(tower: FieldTower, u: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(tower.add(a, b) for a, b in zip(u, v))


def iter_codewords(
    tower: FieldTower, rows: Sequence[Sequence[int]], n: int, start: int = 0, stop: int = None
) -> Iterator[Tuple[int, ...]]:
    """
    Yield the codewords with message index in [start, stop).

    Prefix sums are kept per message position, so advancing the odometer only
    recomputes the positions that changed.
    """
    k = len(rows)
    total = tower.order**k
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    zero = (0,) * n
    if k == 0:
        yield zero
        return

    message = list(reversed(digits(start, tower.order, k)))
    prefix: List[Tuple[int, ...]] = [zero] * (k + 1)

    def rebuild(j: int) -> None:
        for i in range(j, k):
            prefix[i + 1] = _add(tower, prefix[i], _scaled_row(tower, message[i], rows[i])) if message[i] else prefix[i]

    rebuild(0)
    last = tower.order - 1
    for _ in range(start, stop):
        yield prefix[k]
        j = k - 1
        while j >= 0 and message[j] == last:
            message[j] = 0
            j -= 1
        if j < 0:
            break
        message[j] += 1
        rebuild(j)


def count_weights(
    tower: FieldTower, rows: Sequence[Sequence[int]], n: int, metrics: Sequence[Metric], start: int = 0, stop: int = None
) -> Counts:
    counts: Counts = {metric: [0] * (n + 1) for metric in metrics}
    rank = counts.get(Metric.RANK)
    hamming = counts.get(Metric.HAMMING)
    for word in iter_codewords(tower, rows, n, start, stop):
        if rank is not None:
            rank[span_rank(tower, word)] += 1
        if hamming is not None:
            hamming[hamming_weight(word)] += 1
    return counts


def _count_chunk(descriptor: Tuple, rows: Tuple, n: int, metric_values: Tuple[str, ...], start: int, stop: int) -> Dict[str, List[int]]:
    tower = make_field(*descriptor)
    counts = count_weights(tower, rows, n, [Metric(v) for v in metric_values], start, stop)
    return {metric.value: values for metric, values in counts.items()}


def _merge(total: Counts, part: Counts) -> None:
    for metric, values in part.items():
        total[metric] = [a + b for a, b in zip(total[metric], values)]


def enumerate_weights(code: LinearCode, metrics: Sequence[Metric], guard: int = None, workers: int = None) -> Counts:
    """
    Count codewords of each weight under each metric.

    Args:
        code: code to enumerate
        metrics: metrics to bucket by, all in a single pass
        guard: largest admissible |C|; settings default when None
        workers: process count; settings default when None

    Returns:
        Dictionary metric -> count vector of length n + 1

    Raises:
        EnumerationGuardExceededError: if |C| exceeds the guard
    """
    check_guard(code.size, guard)
    workers = get_settings().workers if workers is None else workers
    tower, n = code.tower, code.n
    rows = code.rows()

    if workers <= 1 or code.size < 2 * workers:
        counts = count_weights(tower, rows, n, metrics)
    else:
        chunk_count = workers * CHUNKS_PER_WORKER
        step = -(-code.size // chunk_count)
        bounds = [(s, min(s + step, code.size)) for s in range(0, code.size, step)]
        logger.info(f"Enumerating {code.size} codewords of {code!r} in {len(bounds)} chunks on {workers} workers")
        counts = {metric: [0] * (n + 1) for metric in metrics}
        metric_values = tuple(metric.value for metric in metrics)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_count_chunk, tower.descriptor(), rows, n, metric_values, start, stop) for start, stop in bounds
            ]
            for future in futures:
                _merge(counts, {Metric(k): v for k, v in future.result().items()})

    logger.info(f"Enumerated {code.size} codewords of {code!r}")
    return counts
