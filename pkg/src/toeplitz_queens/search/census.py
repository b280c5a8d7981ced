# SPDX-License-Identifier: Apache-2.0

"""Per-order table of solvability, solution counts and fundamental counts"""

import logging
from typing import Optional

from toeplitz_queens.construct.solution import construct_solution
from toeplitz_queens.core.board import is_solvable, require_order
from toeplitz_queens.core.verify import verify_solution
from toeplitz_queens.search.orbits import build_report
from toeplitz_queens.utils.config import load_caps

logger = logging.getLogger(__name__)

CENSUS_HEADERS = ['n', 'solvable', 'total_count', 'fundamental_count', 'orbit_sizes', 'construct_ok']


def census(start: int, stop: int, cap: Optional[int] = None, workers: Optional[int] = None) -> list:
    """One row per n in start..stop; counts are left empty above the enumeration cap"""
    require_order(start)
    limit = cap if cap is not None else load_caps()['enumerate']
    rows = []
    for n in range(start, stop + 1):
        solvable = is_solvable(n)
        construct_ok = bool(verify_solution(construct_solution(n)[0])) if solvable else None
        total = fundamental = sizes = None
        if n <= limit:
            report = build_report(n, fundamental=True, cap=limit, workers=workers)
            total, fundamental = report.total_count, report.fundamental_count
            sizes = " ".join(f"{size}:{count}" for size, count in report.orbit_sizes.items())
        logger.info(f"  n = {n}: solvable={solvable} total={total} fundamental={fundamental}")
        rows.append([n, solvable, total, fundamental, sizes, construct_ok])
    return rows
