# SPDX-License-Identifier: Apache-2.0

"""Exhaustive backtracking over solutions of T_n

Rows are filled in increasing order and f(i) is tried in increasing order, so
solutions come out in lexicographic order without sorting. Columns, values
and remaining rows are tracked as bitmasks; a branch is cut as soon as some
unused value can no longer be realized by any remaining (row, column) pair.

The search tree splits on f(1) into n independent subtrees, which run on a
process pool and are merged in submission order.
"""

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Optional

from toeplitz_queens.core.board import SolutionPermutation, require_order
from toeplitz_queens.core.errors import CapExceededError
from toeplitz_queens.core.verify import verify_solution
from toeplitz_queens.utils.config import load_caps, load_workers

logger = logging.getLogger(__name__)

NAIVE_CAP = 9


def _realizable(n: int, row: int, free_columns: int, free_values: int) -> bool:
    """Every unused value still has some free column at that distance from a row >= ``row``"""
    rows = ((1 << (n + 1)) - 1) & ~((1 << row) - 1)
    values = free_values
    while values:
        v = values.bit_length() - 1
        if not ((free_columns << v) & rows or (free_columns >> v) & rows):
            return False
        values &= ~(1 << v)
    return True


def _search(n: int, row: int, free_columns: int, free_values: int, prefix: list, out: Optional[list]) -> int:
    if row > n:
        if out is not None:
            out.append(tuple(prefix))
        return 1
    found = 0
    columns = free_columns
    while columns:
        low = columns & -columns
        j = low.bit_length() - 1
        columns ^= low
        bit = 1 << abs(row - j)
        if not free_values & bit:
            continue
        rest_columns = free_columns ^ low
        rest_values = free_values ^ bit
        if not _realizable(n, row + 1, rest_columns, rest_values):
            continue
        prefix.append(j)
        found += _search(n, row + 1, rest_columns, rest_values, prefix, out)
        prefix.pop()
    return found


def _subtree(n: int, first: int, collect: bool):
    """All completions with f(1) = first; runs inside a worker process"""
    all_columns = ((1 << (n + 1)) - 1) & ~1
    all_values = (1 << n) - 1
    bit = 1 << (first - 1)
    out = [] if collect else None
    count = 0
    if _realizable(n, 2, all_columns ^ (1 << first), all_values ^ bit):
        count = _search(n, 2, all_columns ^ (1 << first), all_values ^ bit, [first], out)
    return first, count, out


def _resolve_cap(operation: str, n: int, cap: Optional[int]) -> int:
    limit = cap if cap is not None else load_caps()[operation]
    if n > limit:
        raise CapExceededError(operation, n, limit)
    return limit


def _run(n: int, collect: bool, workers: Optional[int]):
    workers = workers or load_workers() or os.cpu_count() or 4
    workers = min(workers, n)
    start = time.perf_counter()
    logger.debug(f"searching T_{n} over {n} subtrees with {workers} worker(s)")

    if workers <= 1:
        parts = [_subtree(n, first, collect) for first in range(1, n + 1)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_subtree, n, first, collect) for first in range(1, n + 1)]
            try:
                parts = [future.result() for future in futures]
            except BaseException:
                for future in futures:
                    future.cancel()
                raise

    total = 0
    solutions = [] if collect else None
    for first, count, out in parts:
        logger.debug(f"  f(1) = {first}: {count} solution(s)")
        total += count
        if collect:
            solutions.extend(out)
    logger.info(f"T_{n}: {total} solution(s) in {time.perf_counter() - start:.3f}s")
    return total, solutions


def enumerate_solutions(n: int, cap: Optional[int] = None, workers: Optional[int] = None) -> list:
    """All solutions of T_n, lexicographically ordered"""
    require_order(n)
    _resolve_cap("enumerate", n, cap)
    _, solutions = _run(n, True, workers)
    return [SolutionPermutation(n, f) for f in solutions]


def count_solutions(n: int, cap: Optional[int] = None, workers: Optional[int] = None) -> int:
    """Number of solutions of T_n without materializing them"""
    require_order(n)
    _resolve_cap("count", n, cap)
    total, _ = _run(n, False, workers)
    return total


def naive_solutions(n: int) -> list:
    """Scan all n! permutations and keep the ones verify_solution accepts"""
    require_order(n)
    if n > NAIVE_CAP:
        raise CapExceededError("naive scan", n, NAIVE_CAP)
    found = []
    for f in permutations(range(1, n + 1)):
        candidate = SolutionPermutation(n, f)
        if verify_solution(candidate):
            found.append(candidate)
    return found
