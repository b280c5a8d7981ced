# SPDX-License-Identifier: Apache-2.0

"""Domination number of T_n by iterative deepening

For k = 1, 2, ... run a complete depth-first search for k queens covering every
square. Each level branches on the queens able to cover the first uncovered
square, and a branch is dropped once k' queens of maximum reach cannot cover
what is left. The first k that succeeds is the domination number; the failed
searches for smaller k prove minimality.
"""

import logging
import time
from dataclasses import dataclass
from typing import Optional

from toeplitz_queens.core.board import Placement, cell_value, require_order
from toeplitz_queens.core.errors import CapExceededError
from toeplitz_queens.utils.config import load_caps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DominationReport:
    n: int
    gamma: int
    witness: Placement
    elapsed: float = 0.0
    nodes: int = 0


def covers_board(placement: Placement, n: int) -> bool:
    """Every square holds a queen or shares a row, column or value with one

    Written independently of the search below so it can check its witnesses.
    """
    queens = placement.sorted_cells()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if not any(qi == i or qj == j or cell_value(qi, qj) == cell_value(i, j) for qi, qj in queens):
                return False
    return True


def _cover_masks(n: int) -> list:
    """Bitmask of squares covered by a queen on each square, squares indexed row-major"""
    masks = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            mask = 0
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    if a == i or b == j or abs(a - b) == abs(i - j):
                        mask |= 1 << ((a - 1) * n + (b - 1))
            masks.append(mask)
    return masks


class _DominationSearch:
    def __init__(self, n: int):
        self.n = n
        self.masks = _cover_masks(n)
        self.reach = max(bin(m).count("1") for m in self.masks)
        # coverage is symmetric: the squares able to cover q are the squares q covers
        self.coverers = [[c for c in range(n * n) if self.masks[q] >> c & 1] for q in range(n * n)]
        self.nodes = 0

    def solve(self, k: int) -> Optional[list]:
        return self._dfs((1 << (self.n * self.n)) - 1, k, [])

    def _dfs(self, uncovered: int, k: int, chosen: list) -> Optional[list]:
        self.nodes += 1
        if not uncovered:
            return list(chosen)
        if k == 0 or bin(uncovered).count("1") > k * self.reach:
            return None
        first = (uncovered & -uncovered).bit_length() - 1
        for c in self.coverers[first]:
            chosen.append(c)
            found = self._dfs(uncovered & ~self.masks[c], k - 1, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None


def domination_number(n: int, cap: Optional[int] = None) -> DominationReport:
    """Exact minimum number of queens dominating T_n, with a witness"""
    require_order(n)
    limit = cap if cap is not None else load_caps()['dominate']
    if n > limit:
        raise CapExceededError("dominate", n, limit)

    start = time.perf_counter()
    search = _DominationSearch(n)
    k = 0
    while True:
        k += 1
        found = search.solve(k)
        logger.debug(f"T_{n}: k = {k} {'covers' if found else 'does not cover'} ({search.nodes} nodes so far)")
        if found is not None:
            break

    witness = Placement(n, ((c // n + 1, c % n + 1) for c in found))
    elapsed = time.perf_counter() - start
    logger.info(f"T_{n}: domination number {k} ({search.nodes} nodes, {elapsed:.3f}s)")
    return DominationReport(n, k, witness, elapsed, search.nodes)
